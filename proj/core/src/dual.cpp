#include "supertrop/dual.hpp"

#include <sstream>

#include "supertrop/determinant.hpp"
#include "supertrop/error.hpp"
#include "supertrop/quasi_inverse.hpp"
#include "supertrop/random.hpp"
#include "supertrop/rank.hpp"

namespace supertrop {

namespace {

Vector random_vector(TrialRng& rng, std::size_t n, bool tangible_only) {
  Vector v = Vector::zeros(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rng.chance(0.2)) continue;
    const long x = rng.uniform(-3, 3);
    v[i] = (!tangible_only && rng.chance(0.25)) ? Scalar::ghost(x) : Scalar::tangible(x);
  }
  if (tangible_only && !is_tangible_vector(v)) v[0] = Scalar::one();
  return v;
}

std::string show(const Vector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.dim(); ++i) os << (i ? ", " : "") << v[i];
  os << ')';
  return os.str();
}

}  // namespace

Scalar Functional::operator()(const Vector& v) const {
  if (v.dim() != row_.dim()) {
    throw DimensionError("functional of length " + std::to_string(row_.dim()) + " applied to a vector of dimension " +
                         std::to_string(v.dim()));
  }
  Scalar out;
  for (std::size_t j = 0; j < v.dim(); ++j) out += row_[j] * v[j];
  return out;
}

Vector project_closed(const Matrix& a, const Vector& v) { return quasi_identities(a).left * v; }

Vector lower(const Matrix& a, const Vector& v) { return double_pseudo(a) * v; }

Matrix DualBase::row_matrix() const {
  std::vector<std::vector<Scalar>> rows;
  rows.reserve(functionals.size());
  for (const auto& f : functionals) rows.emplace_back(f.row().begin(), f.row().end());
  return Matrix::from_rows(rows);
}

DualBase dual_base(const Matrix& a) {
  require_nonsingular(a, "dual base");
  if (!is_closed_base(a)) {
    throw DomainError(
        "dual base needs a closed d-base (I_A A = A); this base is not closed, pass close(A) = I_A A instead");
  }
  const Matrix lowered = double_pseudo(a);
  DualBase d{a, {}};
  d.functionals.reserve(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) d.functionals.emplace_back(lowered.row(i));
  return d;
}

Matrix dual_eval_matrix(const DualBase& d) {
  const std::size_t n = d.size();
  Matrix grid(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) grid(i, j) = d.functionals[i](d.source.col(j));
  return grid;
}

Matrix base_pairing_grid(const Matrix& a) { return a.transpose() * double_pseudo(a) * a; }

std::size_t dual_rank(const DualBase& d) { return rank(d.row_matrix()); }

bool ghost_kernel_contains(const Matrix& m, const Vector& v) { return is_ghost_vector(m * v); }

std::string to_string(Certainty c) {
  switch (c) {
    case Certainty::Proved:
      return "proved";
    case Certainty::NoCounterexample:
      return "no-counterexample";
    case Certainty::Refuted:
      return "refuted";
  }
  return {};
}

MonicReport is_ghost_monic(const Matrix& m, std::size_t trials, std::uint64_t seed) {
  require_square(m, "ghost-monic test");
  const std::size_t n = m.rows();
  if (det_value(m).is_tangible()) {
    return {true, Certainty::Proved, std::nullopt, 0};
  }
  MonicReport report;
  for (std::size_t t = 0; t < trials; ++t) {
    Vector v(std::vector<Scalar>(n, Scalar::one()));
    if (t > 0) {
      TrialRng rng(seed, t, 0x6d6f6e6963);
      v = random_vector(rng, n, true);
    }
    report.trials = t + 1;
    if (ghost_kernel_contains(m, v)) {
      report.ghost_monic = false;
      report.certainty = Certainty::Refuted;
      report.witness = v;
      return report;
    }
  }
  report.ghost_monic = true;
  report.certainty = Certainty::NoCounterexample;
  return report;
}

bool is_tropically_onto(const Matrix& m) {
  require_square(m, "tropically-onto test");
  return rank(m) == m.rows();
}

Scalar double_dual_eval(const Vector& v, const Functional& f) { return f(v); }

Matrix double_dual_grid(const DualBase& d) {
  const std::size_t n = d.size();
  Matrix grid(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const Vector b = d.source.col(j);
    for (std::size_t i = 0; i < n; ++i) grid(i, j) = double_dual_eval(b, d.functionals[i]);
  }
  return grid;
}

Matrix phi_matrix(const DualBase& d) { return double_dual_grid(d).transpose(); }

MapAxiomReport check_map_axioms(const Matrix& m, std::size_t trials, std::uint64_t seed) {
  MapAxiomReport report;
  const std::size_t n = m.cols();
  for (std::size_t t = 0; t < trials; ++t) {
    TrialRng rng(seed, t, 0x6d6170);
    const Vector v = random_vector(rng, n, false);
    const Vector w = random_vector(rng, n, false);
    const Scalar a = Scalar::tangible(rng.uniform(-5, 5));
    const Scalar g = Scalar::ghost(rng.uniform(-5, 5));
    report.trials = t + 1;

    const Vector sum_image = m * (v + w);
    const Vector image_sum = m * v + m * w;
    std::string failure;
    if (!(sum_image == image_sum) || !ghost_surpasses(sum_image, image_sum)) {
      failure = "phi(v+w) != phi(v)+phi(w)";
    } else if (!(m * (a * v) == a * (m * v))) {
      failure = "phi(av) != a phi(v) for tangible a = " + to_string(a);
    } else if (!ghost_surpasses(m * (g * v), g * (m * v))) {
      failure = "phi(av) does not ghost-surpass a phi(v) for ghost a = " + to_string(g);
    }
    if (!failure.empty()) {
      report.passed = false;
      report.counterexample = failure + " at v = " + show(v) + ", w = " + show(w);
      return report;
    }
  }
  return report;
}

}  // namespace supertrop
