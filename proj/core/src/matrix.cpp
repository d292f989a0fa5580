#include "supertrop/matrix.hpp"

#include <string>

#include "supertrop/error.hpp"

namespace supertrop {

namespace {

std::string shape(const Matrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

}  // namespace

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  std::vector<std::vector<Scalar>> tmp;
  for (const auto& r : rows) tmp.emplace_back(r);
  *this = from_rows(tmp);
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one();
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
  if (rows.empty()) return Matrix();
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) {
      throw DimensionError("ragged matrix: row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                           " entries, expected " + std::to_string(m.cols_));
    }
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_columns(std::span<const Vector> columns) {
  if (columns.empty()) return Matrix();
  const std::size_t n = columns.front().dim();
  Matrix m(n, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].dim() != n) {
      throw DimensionError("vectors of mixed dimension (" + std::to_string(columns[j].dim()) + " vs " +
                           std::to_string(n) + ")");
    }
    for (std::size_t i = 0; i < n; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

Matrix Matrix::diagonal(std::span<const Scalar> diag) {
  Matrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

Vector Matrix::row(std::size_t i) const {
  std::vector<Scalar> out(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  return Vector(std::move(out));
}

Vector Matrix::col(std::size_t j) const {
  std::vector<Scalar> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
  return Vector(std::move(out));
}

std::vector<Vector> Matrix::columns() const {
  std::vector<Vector> out;
  out.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(col(j));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::submatrix(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const {
  Matrix s(row_idx.size(), col_idx.size());
  for (std::size_t i = 0; i < row_idx.size(); ++i)
    for (std::size_t j = 0; j < col_idx.size(); ++j) s(i, j) = (*this)(row_idx[i], col_idx[j]);
  return s;
}

Matrix Matrix::minor(std::size_t r, std::size_t c) const {
  Matrix s(rows_ - 1, cols_ - 1);
  for (std::size_t i = 0, si = 0; i < rows_; ++i) {
    if (i == r) continue;
    for (std::size_t j = 0, sj = 0; j < cols_; ++j) {
      if (j == c) continue;
      s(si, sj++) = (*this)(i, j);
    }
    ++si;
  }
  return s;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("matrix product: shape mismatch " + shape(a) + " * " + shape(b));
  }
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols() != v.dim()) {
    throw DimensionError("matrix-vector product: " + shape(a) + " applied to a vector of dimension " +
                         std::to_string(v.dim()));
  }
  Vector out = Vector::zeros(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) out[i] += a(i, k) * v[k];
  return out;
}

Matrix operator*(const Scalar& s, Matrix m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = s * m(i, j);
  return m;
}

Matrix operator+(Matrix a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("matrix sum: shape mismatch " + shape(a) + " + " + shape(b));
  }
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) += b(i, j);
  return a;
}

Vector row_times(const Vector& r, const Matrix& m) {
  if (r.dim() != m.rows()) {
    throw DimensionError("row-vector product: length " + std::to_string(r.dim()) + " against " + shape(m));
  }
  Vector out = Vector::zeros(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t k = 0; k < m.rows(); ++k) out[j] += r[k] * m(k, j);
  return out;
}

bool ghost_surpasses(const Matrix& b, const Matrix& a) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("ghost surpass: shape mismatch " + shape(b) + " vs " + shape(a));
  }
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!ghost_surpasses(b(i, j), a(i, j))) return false;
  return true;
}

void require_square(const Matrix& a, const char* what) {
  if (!a.is_square() || a.empty()) {
    throw DimensionError(std::string(what) + " needs a nonempty square matrix, got " + shape(a));
  }
}

}  // namespace supertrop
