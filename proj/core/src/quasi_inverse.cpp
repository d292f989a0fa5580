#include "supertrop/quasi_inverse.hpp"

#include <string>

#include "supertrop/determinant.hpp"
#include "supertrop/error.hpp"

namespace supertrop {

namespace {

Scalar checked_det(const Matrix& a, const char* what) {
  require_square(a, what);
  Scalar d = det_value(a);
  if (!d.is_tangible()) {
    throw DomainError("singular matrix: |A| = " + to_string(d) + " (" + what + " needs a nonsingular matrix)");
  }
  return d;
}

Matrix pseudo_inverse_with(const Matrix& a, const Scalar& d) { return inv(d) * adjoint(a); }

}  // namespace

void require_nonsingular(const Matrix& a, const char* what) { checked_det(a, what); }

Matrix adjoint(const Matrix& a) {
  require_square(a, "adjoint");
  const std::size_t n = a.rows();
  if (n == 1) return Matrix::identity(1);
  Matrix adj(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) adj(i, j) = det_value(a.minor(j, i));
  return adj;
}

Matrix pseudo_inverse(const Matrix& a) { return pseudo_inverse_with(a, checked_det(a, "quasi-inverse")); }

QuasiIdentities quasi_identities(const Matrix& a) {
  const Matrix p = pseudo_inverse_with(a, checked_det(a, "quasi-identity"));
  return {a * p, p * a};
}

bool is_quasi_identity(const Matrix& m) {
  require_square(m, "quasi-identity test");
  return m * m == m && det_value(m) == Scalar::one() && ghost_surpasses(m, Matrix::identity(m.rows()));
}

Matrix double_pseudo(const Matrix& a) {
  const Matrix p = pseudo_inverse_with(a, checked_det(a, "double quasi-inverse"));
  return p * (a * p);
}

Matrix close(const Matrix& a) {
  const Matrix p = pseudo_inverse_with(a, checked_det(a, "closure I_A A"));
  return (a * p) * a;
}

bool is_closed_base(const Matrix& a) {
  const Matrix p = pseudo_inverse_with(a, checked_det(a, "closed-base test"));
  return (a * p) * a == a;
}

}  // namespace supertrop
