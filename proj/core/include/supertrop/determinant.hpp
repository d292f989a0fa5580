#pragma once

#include <cstddef>
#include <vector>

#include "supertrop/matrix.hpp"
#include "supertrop/scalar.hpp"

namespace supertrop {

/// perm[i] = column matched to row i.
using Permutation = std::vector<std::size_t>;

/// The supertropical determinant |A| = sum_sigma prod_i a_{i,sigma(i)}
/// together with the permutations attaining its nu-value.
///
/// value is ghost iff there are at least two witnesses or the single
/// witness runs through a ghost entry; value is -inf iff no permutation
/// avoids every -inf entry (and then witnesses is empty).
struct DetResult {
  Scalar value;
  std::vector<Permutation> witnesses;

  bool nonsingular() const { return value.is_tangible(); }
  /// More than one permutation attains the maximal nu-value.
  bool tied() const { return witnesses.size() >= 2; }
};

/// Largest n accepted by the expansion engine.
inline constexpr std::size_t kExpansionCap = 8;

/// Full permutation expansion. Lists every nu-maximal permutation.
/// Throws CapacityError above kExpansionCap.
DetResult det(const Matrix& a);

/// Maximum-weight assignment engine, any n.
///
/// Solves the assignment problem on the nu-values, then forbids each edge
/// of the optimum in turn and re-solves; re-attaining the optimum proves a
/// tie. witnesses holds the optimum found plus, on a tie, the first
/// alternative optimum, so it is a subset of det()'s witness list with the
/// same tied() verdict.
DetResult det_assignment(const Matrix& a);

enum class DetEngine { Expand, Assign };

DetResult det(const Matrix& a, DetEngine engine);

/// Value only; expansion for small n, assignment beyond.
Scalar det_value(const Matrix& a);

}  // namespace supertrop
