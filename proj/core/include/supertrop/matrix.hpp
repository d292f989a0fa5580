#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "supertrop/scalar.hpp"
#include "supertrop/vector.hpp"

namespace supertrop {

/// Dense row-major matrix over F.
///
/// A base {b_1, ..., b_n} is carried as the matrix A(B) whose columns are
/// the b_j; see from_columns().
class Matrix {
 public:
  Matrix() = default;
  /// rows x cols filled with -inf.
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);
  /// Throws DimensionError on ragged input.
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);
  static Matrix from_columns(std::span<const Vector> columns);
  static Matrix diagonal(std::span<const Scalar> diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return data_.empty(); }

  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector col(std::size_t j) const;
  std::vector<Vector> columns() const;

  Matrix transpose() const;
  Matrix submatrix(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const;
  /// Deletes row r and column c.
  Matrix minor(std::size_t r, std::size_t c) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Semiring product. Throws DimensionError when cols(a) != rows(b).
Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, const Vector& v);
Matrix operator*(const Scalar& s, Matrix m);
Matrix operator+(Matrix a, const Matrix& b);

inline Matrix mat_mul(const Matrix& a, const Matrix& b) { return a * b; }

/// Row vector times matrix: (r^T M)_j.
Vector row_times(const Vector& r, const Matrix& m);

/// Entrywise b |= a.
bool ghost_surpasses(const Matrix& b, const Matrix& a);

void require_square(const Matrix& a, const char* what);

}  // namespace supertrop
