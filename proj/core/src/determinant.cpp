#include "supertrop/determinant.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "assignment.hpp"
#include "supertrop/error.hpp"

namespace supertrop {

DetResult det(const Matrix& a) {
  require_square(a, "determinant");
  const std::size_t n = a.rows();
  if (n > kExpansionCap) {
    throw CapacityError("expansion determinant is capped at n = " + std::to_string(kExpansionCap) + ", got n = " +
                        std::to_string(n) + "; use the assignment engine");
  }
  DetResult out;
  Permutation perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    Scalar term = Scalar::one();
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i) term *= a(i, perm[i]);
    if (term.is_zero()) continue;
    switch (nu_cmp(term, out.value)) {
      case NuOrder::Gt:
        out.witnesses.assign(1, perm);
        break;
      case NuOrder::Match:
        out.witnesses.push_back(perm);
        break;
      case NuOrder::Lt:
        break;
    }
    out.value += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

DetResult det_assignment(const Matrix& a) {
  require_square(a, "determinant");
  const std::size_t n = a.rows();
  detail::WeightGrid weights(n, std::vector<std::optional<GroupValue>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!a(i, j).is_zero()) weights[i][j] = a(i, j).value();

  const auto best = detail::max_weight_assignment(weights);
  if (!best) return {};

  DetResult out;
  out.witnesses.push_back(best->perm);
  bool ghost = false;
  for (std::size_t i = 0; i < n; ++i) ghost = ghost || a(i, best->perm[i]).is_ghost();

  for (std::size_t i = 0; i < n; ++i) {
    auto probe = weights;
    probe[i][best->perm[i]].reset();
    const auto alt = detail::max_weight_assignment(probe);
    if (alt && alt->total == best->total) {
      out.witnesses.push_back(alt->perm);
      ghost = true;
      break;
    }
  }
  out.value = ghost ? Scalar::ghost(best->total) : Scalar::tangible(best->total);
  return out;
}

DetResult det(const Matrix& a, DetEngine engine) {
  return engine == DetEngine::Expand ? det(a) : det_assignment(a);
}

Scalar det_value(const Matrix& a) {
  require_square(a, "determinant");
  return a.rows() <= 6 ? det(a).value : det_assignment(a).value;
}

}  // namespace supertrop
