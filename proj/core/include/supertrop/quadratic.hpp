#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "supertrop/bilinear.hpp"

namespace supertrop {

/// Q(sum a_i e_i) = sum a_i^2 q_i. Strictly quasilinear by construction.
struct DiagonalForm {
  std::vector<Scalar> coefficients;

  friend bool operator==(const DiagonalForm&, const DiagonalForm&) = default;
};

class QuadraticForm {
 public:
  /// Q_B(v) = <v, v>.
  explicit QuadraticForm(BilinearForm f) : rep_(std::move(f)) {}
  /// Throws DimensionError on an empty coefficient list.
  explicit QuadraticForm(DiagonalForm d);

  static QuadraticForm diagonal(std::vector<Scalar> q) { return QuadraticForm(DiagonalForm{std::move(q)}); }

  bool is_diagonal() const { return std::holds_alternative<DiagonalForm>(rep_); }
  std::size_t dim() const;

  /// Throw DomainError when the representation differs.
  const BilinearForm& form() const;
  const DiagonalForm& coefficients() const;

  friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;

 private:
  std::variant<BilinearForm, DiagonalForm> rep_;
};

Scalar q_eval(const QuadraticForm& q, const Vector& v);

enum class Quasilinearity { Strict, Quasilinear, Neither };

std::string to_string(Quasilinearity k);

struct QuasilinearityReport {
  Quasilinearity kind = Quasilinearity::Strict;
  std::size_t trials = 0;
  /// Decided without sampling (Diagonal representation).
  bool analytic = false;
  std::optional<std::string> counterexample;
};

/// Diagonal: Strict, analytically. Form-backed: checks Q(v+w) against
/// Q(v)+Q(w) on the standard-base pairs, then on `trials` seeded pairs.
QuasilinearityReport quasilinearity_check(const QuadraticForm& q, std::size_t trials, std::uint64_t seed);

/// B_Q with g_ij = sqrt(Q(e_i) Q(e_j)). A form-backed Q must pass
/// quasilinearity_check as Strict first, else DomainError.
BilinearForm form_from_q(const QuadraticForm& q, std::size_t trials = 200, std::uint64_t seed = 0);

/// Gram [[-inf, a], [a, -inf]]. Throws DomainError unless a is tangible.
BilinearForm hyperbolic_plane(const Scalar& a);

/// b1, b2 g-isotropic and Q(b1+b2) >nu Q(b1)+Q(b2) for Q = Q_F.
/// Throws DomainError when {b1, b2} is dependent.
bool is_hyperbolic_plane(const BilinearForm& f, const Vector& b1, const Vector& b2);

/// Q1 (+) Q2. Both must share a representation, else DomainError.
QuadraticForm orthogonal_sum(const QuadraticForm& q1, const QuadraticForm& q2);

struct DiagonalConversion {
  QuadraticForm diagonal;
  /// The base the coefficients were read on.
  std::vector<Vector> base;
};

/// Diagonal form of a form-backed Q over a supertropically symmetric form
/// that passes the Strict check, read on the standard base. A diagonal Q is
/// returned unchanged. Throws DomainError otherwise.
DiagonalConversion to_diagonal(const QuadraticForm& q, std::size_t trials = 200, std::uint64_t seed = 0);

/// One 1-dimensional Diagonal form per coefficient.
std::vector<QuadraticForm> split_diagonal(const QuadraticForm& q);

/// Diagonal form with coefficients Q_F(a_i) over the anisotropic part of a
/// decomposition, in the coordinates of that part.
QuadraticForm anisotropic_part(const BilinearForm& f, const Decomposition& d);

}  // namespace supertrop
