#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "supertrop/matrix.hpp"
#include "supertrop/vector.hpp"

namespace supertrop {

/// A linear functional f(v) = sum_j row_j v_j, kept as its row vector.
class Functional {
 public:
  explicit Functional(Vector row) : row_(std::move(row)) {}

  const Vector& row() const { return row_; }
  std::size_t dim() const { return row_.dim(); }

  /// Throws DimensionError on mismatch.
  Scalar operator()(const Vector& v) const;

  friend bool operator==(const Functional&, const Functional&) = default;

 private:
  Vector row_;
};

inline Scalar apply(const Functional& f, const Vector& v) { return f(v); }

/// L~_A(v) = I_A v. Idempotent, identity on the closed column space.
Vector project_closed(const Matrix& a, const Vector& v);

/// L_A(v) = A^nabla-nabla v. On the closed column space this returns
/// coordinates: the j-th column of close(A) maps to the j-th column of I'_A.
Vector lower(const Matrix& a, const Vector& v);

/// The dual base {eps_i} of a closed base A, eps_i(v) = (A^nabla-nabla v)_i.
struct DualBase {
  Matrix source;
  std::vector<Functional> functionals;

  std::size_t size() const { return functionals.size(); }
  /// n x n matrix whose i-th row is eps_i.
  Matrix row_matrix() const;
};

/// Requires A nonsingular and closed (I_A A = A); a non-closed base throws
/// DomainError pointing at close().
DualBase dual_base(const Matrix& a);

/// [eps_i(b_j)]: diagonal 1, off-diagonal in G0 for a closed base.
Matrix dual_eval_matrix(const DualBase& d);

/// [b_i^T A^nabla-nabla b_j], the base-vector pairing grid. Kept for
/// comparison with dual_eval_matrix(); the two differ off the standard base.
Matrix base_pairing_grid(const Matrix& a);

/// Rank of the functionals' row matrix; n for a closed nonsingular base.
std::size_t dual_rank(const DualBase& d);

/// M v lies in the ghost subspace.
bool ghost_kernel_contains(const Matrix& m, const Vector& v);

enum class Certainty { Proved, NoCounterexample, Refuted };

std::string to_string(Certainty c);

struct MonicReport {
  bool ghost_monic = false;
  Certainty certainty = Certainty::NoCounterexample;
  /// A tangible vector in the ghost kernel when refuted.
  std::optional<Vector> witness;
  std::size_t trials = 0;
};

/// Exact (Proved) for nonsingular M: a nonsingular matrix has no tangible
/// g-annihilator. Otherwise searches `trials` seeded tangible vectors,
/// starting with the all-1 vector, and reports Refuted or NoCounterexample.
MonicReport is_ghost_monic(const Matrix& m, std::size_t trials, std::uint64_t seed);

/// rank(M) = n. Square M, n <= 10.
bool is_tropically_onto(const Matrix& m);

/// v**(f) = f(v).
Scalar double_dual_eval(const Vector& v, const Functional& f);

/// [b_j**(eps_i)] over the source base of d.
Matrix double_dual_grid(const DualBase& d);

/// Rows are Phi(b_j) written in the coordinates (eps_1, ..., eps_n).
Matrix phi_matrix(const DualBase& d);

struct MapAxiomReport {
  bool passed = true;
  std::size_t trials = 0;
  std::optional<std::string> counterexample;
};

/// Samples vectors and scalars and checks, for phi(v) = M v:
/// phi(v+w) = phi(v)+phi(w) (hence |=), phi(a v) = a phi(v) for tangible a,
/// and phi(a v) |= a phi(v) for ghost a.
MapAxiomReport check_map_axioms(const Matrix& m, std::size_t trials, std::uint64_t seed);

}  // namespace supertrop
