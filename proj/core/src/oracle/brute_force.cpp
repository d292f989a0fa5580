#include <algorithm>
#include <numeric>

#include "supertrop/error.hpp"
#include "supertrop/oracle.hpp"

namespace supertrop::oracle {

namespace {

struct Expansion {
  const Matrix& a;
  std::size_t n;
  std::vector<std::size_t> perm;
  std::vector<bool> used;
  std::optional<GroupValue> best;
  std::vector<Permutation> best_perms;
  bool best_has_ghost = false;

  void walk(std::size_t row, const GroupValue& sum, bool ghost) {
    if (row == n) {
      if (!best || sum > *best) {
        best = sum;
        best_perms.assign(1, perm);
        best_has_ghost = ghost;
      } else if (sum == *best) {
        best_perms.push_back(perm);
        best_has_ghost = best_has_ghost || ghost;
      }
      return;
    }
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c]) continue;
      const Scalar& x = a(row, c);
      if (x.is_zero()) continue;
      used[c] = true;
      perm[row] = c;
      walk(row + 1, sum + x.value(), ghost || x.is_ghost());
      used[c] = false;
    }
  }
};

}  // namespace

DetResult brute_force_det(const Matrix& a) {
  require_square(a, "brute-force determinant");
  const std::size_t n = a.rows();
  if (n > kExpansionCap) {
    throw CapacityError("brute-force determinant is limited to n <= " + std::to_string(kExpansionCap) + ", got " +
                        std::to_string(n));
  }
  Expansion e{a, n, std::vector<std::size_t>(n), std::vector<bool>(n, false), std::nullopt, {}, false};
  e.walk(0, GroupValue(0), false);

  DetResult r;
  if (!e.best) return r;
  r.witnesses = std::move(e.best_perms);
  r.value = (r.witnesses.size() > 1 || e.best_has_ghost) ? Scalar::ghost(*e.best) : Scalar::tangible(*e.best);
  return r;
}

std::optional<std::vector<Scalar>> dependence_search(std::span<const Vector> vectors, std::span<const GroupValue> grid) {
  const std::size_t k = vectors.size();
  if (k == 0 || grid.empty()) return std::nullopt;
  const std::size_t n = vectors.front().dim();
  // Choice 0 is -inf, choice c > 0 is tangible grid[c - 1].
  const std::size_t base = grid.size() + 1;
  std::vector<std::size_t> choice(k, 0);
  std::vector<Scalar> coeffs(k);
  for (std::size_t tried = 0; tried < kDependenceSearchCap; ++tried) {
    std::size_t i = 0;
    while (i < k && ++choice[i] == base) choice[i++] = 0;
    if (i == k) return std::nullopt;
    for (std::size_t j = 0; j < k; ++j) {
      coeffs[j] = choice[j] == 0 ? Scalar::zero() : Scalar::tangible(grid[choice[j] - 1]);
    }
    bool ghost = true;
    for (std::size_t r = 0; r < n && ghost; ++r) {
      Scalar s;
      for (std::size_t j = 0; j < k; ++j) s += coeffs[j] * vectors[j][r];
      ghost = s.in_ghost_ideal();
    }
    if (ghost) return coeffs;
  }
  return std::nullopt;
}

}  // namespace supertrop::oracle
