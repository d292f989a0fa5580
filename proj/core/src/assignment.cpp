#include "assignment.hpp"

#include <algorithm>

namespace supertrop::detail {

std::optional<Assignment> max_weight_assignment(const WeightGrid& weights) {
  const std::size_t n = weights.size();
  if (n == 0) return Assignment{{}, GroupValue(0)};

  std::optional<GroupValue> lo, hi;
  for (const auto& row : weights) {
    for (const auto& w : row) {
      if (!w) continue;
      if (!lo || *w < *lo) lo = *w;
      if (!hi || *w > *hi) hi = *w;
    }
  }
  if (!lo) return std::nullopt;

  // Any matching through a forbidden edge weighs less than every matching
  // that avoids them: n*lo > (n-1)*hi + penalty.
  const GroupValue penalty = *lo - GroupValue(static_cast<long>(n)) * (*hi - *lo) - GroupValue(1);

  // 1-indexed cost matrix for the minimisation form.
  std::vector<std::vector<GroupValue>> cost(n + 1, std::vector<GroupValue>(n + 1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) cost[i + 1][j + 1] = -(weights[i][j] ? *weights[i][j] : penalty);

  std::vector<GroupValue> u(n + 1), v(n + 1);
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::vector<std::optional<GroupValue>> minv(n + 1);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = p[j0];
      std::optional<GroupValue> delta;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        GroupValue cur = cost[i0][j] - u[i0] - v[j];
        if (!minv[j] || cur < *minv[j]) {
          minv[j] = std::move(cur);
          way[j] = j0;
        }
        if (!delta || *minv[j] < *delta) {
          delta = *minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += *delta;
          v[j] -= *delta;
        } else {
          *minv[j] -= *delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  Assignment out{std::vector<std::size_t>(n), GroupValue(0)};
  for (std::size_t j = 1; j <= n; ++j) out.perm[p[j] - 1] = j - 1;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& w = weights[i][out.perm[i]];
    if (!w) return std::nullopt;
    out.total += *w;
  }
  return out;
}

}  // namespace supertrop::detail
