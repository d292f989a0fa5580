#pragma once

#include "supertrop/matrix.hpp"

namespace supertrop {

/// adj(A)_{ij} = |minor of A without row j and column i|. adj of a 1x1
/// matrix is [[1]].
Matrix adjoint(const Matrix& a);

/// A^nabla = (1/|A|) adj(A). Throws DomainError("singular matrix: |A| = ...")
/// unless |A| is tangible.
Matrix pseudo_inverse(const Matrix& a);

struct QuasiIdentities {
  Matrix left;   ///< I_A  = A A^nabla
  Matrix right;  ///< I'_A = A^nabla A
};

QuasiIdentities quasi_identities(const Matrix& a);

/// Idempotent, determinant exactly 1, and ghost-surpasses the identity.
bool is_quasi_identity(const Matrix& m);

/// A^nabla-nabla = A^nabla A A^nabla (computed as A^nabla I_A).
Matrix double_pseudo(const Matrix& a);

/// The closed base A-bar = I_A A.
Matrix close(const Matrix& a);

/// I_A A == A.
bool is_closed_base(const Matrix& a);

/// Throws the library's "singular matrix" DomainError unless |A| is tangible.
void require_nonsingular(const Matrix& a, const char* what);

}  // namespace supertrop
