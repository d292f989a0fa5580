#include "supertrop/rank.hpp"

#include <string>
#include <vector>

#include "supertrop/determinant.hpp"
#include "supertrop/error.hpp"

namespace supertrop {

namespace {

/// Advances idx to the next k-subset of {0..n-1} in lexicographic order.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t pos = k; pos-- > 0;) {
    if (idx[pos] < n - k + pos) {
      ++idx[pos];
      for (std::size_t q = pos + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::size_t> first_combination(std::size_t k) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  return idx;
}

bool has_tangible_minor(const Matrix& a, std::size_t k) {
  auto rows = first_combination(k);
  do {
    auto cols = first_combination(k);
    do {
      if (det_value(a.submatrix(rows, cols)).is_tangible()) return true;
    } while (next_combination(cols, a.cols()));
  } while (next_combination(rows, a.rows()));
  return false;
}

}  // namespace

std::size_t rank(const Matrix& a) {
  if (a.rows() > kRankCap || a.cols() > kRankCap) {
    throw CapacityError("rank is capped at " + std::to_string(kRankCap) + "x" + std::to_string(kRankCap) + ", got " +
                        std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
  for (std::size_t k = std::min(a.rows(), a.cols()); k > 0; --k) {
    if (has_tangible_minor(a, k)) return k;
  }
  return 0;
}

bool independent(std::span<const Vector> vectors) {
  if (vectors.empty()) return true;
  const Matrix a = Matrix::from_columns(vectors);
  if (vectors.size() > a.rows()) return false;
  return rank(a) == vectors.size();
}

}  // namespace supertrop
