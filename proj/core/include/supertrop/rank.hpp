#pragma once

#include <cstddef>
#include <span>

#include "supertrop/matrix.hpp"
#include "supertrop/vector.hpp"

namespace supertrop {

/// Rank enumeration is exhaustive over minors, so it is capped.
inline constexpr std::size_t kRankCap = 10;

/// Largest k such that some k x k submatrix has a tangible determinant;
/// 0 when there is none. Throws CapacityError beyond kRankCap rows or cols.
std::size_t rank(const Matrix& a);

/// Tropical independence: the matrix with these columns has rank k.
/// More vectors than coordinates is never independent; the empty set is.
bool independent(std::span<const Vector> vectors);

}  // namespace supertrop
