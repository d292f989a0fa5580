#include "supertrop/quadratic.hpp"

#include <sstream>

#include "supertrop/error.hpp"
#include "supertrop/random.hpp"
#include "supertrop/rank.hpp"

namespace supertrop {

namespace {

const GroupValue& half() {
  static const GroupValue h = GroupValue::fraction(1, 2);
  return h;
}

std::string show(const Vector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.dim(); ++i) os << (i ? ", " : "") << v[i];
  os << ')';
  return os.str();
}

Vector random_vector(TrialRng& rng, std::size_t n) {
  Vector v = Vector::zeros(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rng.chance(0.15)) continue;
    const long x = rng.uniform(-5, 5);
    v[i] = rng.chance(0.2) ? Scalar::ghost(x) : Scalar::tangible(x);
  }
  return v;
}

}  // namespace

QuadraticForm::QuadraticForm(DiagonalForm d) : rep_(std::move(d)) {
  if (std::get<DiagonalForm>(rep_).coefficients.empty()) throw DimensionError("diagonal quadratic form needs n >= 1");
}

std::size_t QuadraticForm::dim() const {
  if (const auto* d = std::get_if<DiagonalForm>(&rep_)) return d->coefficients.size();
  return std::get<BilinearForm>(rep_).dim();
}

const BilinearForm& QuadraticForm::form() const {
  if (const auto* f = std::get_if<BilinearForm>(&rep_)) return *f;
  throw DomainError("quadratic form is diagonal, not form-backed");
}

const DiagonalForm& QuadraticForm::coefficients() const {
  if (const auto* d = std::get_if<DiagonalForm>(&rep_)) return *d;
  throw DomainError("quadratic form is form-backed, not diagonal");
}

Scalar q_eval(const QuadraticForm& q, const Vector& v) {
  if (!q.is_diagonal()) return q.form()(v, v);
  const auto& c = q.coefficients().coefficients;
  if (v.dim() != c.size()) {
    throw DimensionError("quadratic form of dimension " + std::to_string(c.size()) + " applied to a vector of dimension " +
                         std::to_string(v.dim()));
  }
  Scalar out;
  for (std::size_t i = 0; i < c.size(); ++i) out += v[i] * v[i] * c[i];
  return out;
}

std::string to_string(Quasilinearity k) {
  switch (k) {
    case Quasilinearity::Strict:
      return "strict";
    case Quasilinearity::Quasilinear:
      return "quasilinear";
    case Quasilinearity::Neither:
      return "neither";
  }
  return {};
}

QuasilinearityReport quasilinearity_check(const QuadraticForm& q, std::size_t trials, std::uint64_t seed) {
  QuasilinearityReport r;
  if (q.is_diagonal()) {
    r.analytic = true;
    return r;
  }
  const std::size_t n = q.dim();

  auto probe = [&](const Vector& v, const Vector& w) {
    ++r.trials;
    const Scalar whole = q_eval(q, v + w);
    const Scalar parts = q_eval(q, v) + q_eval(q, w);
    if (whole == parts) return true;
    if (ghost_surpasses(whole, parts)) {
      if (r.kind == Quasilinearity::Strict) {
        r.kind = Quasilinearity::Quasilinear;
        r.counterexample = "Q(v+w) = " + to_string(whole) + " but Q(v)+Q(w) = " + to_string(parts) + " at v = " +
                           show(v) + ", w = " + show(w);
      }
      return true;
    }
    r.kind = Quasilinearity::Neither;
    r.counterexample = "Q(v+w) = " + to_string(whole) + " does not ghost-surpass Q(v)+Q(w) = " + to_string(parts) +
                       " at v = " + show(v) + ", w = " + show(w);
    return false;
  };

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!probe(Vector::unit(n, i), Vector::unit(n, j))) return r;
  for (std::size_t t = 0; t < trials; ++t) {
    TrialRng rng(seed, t, 0x71756164);
    const Vector v = random_vector(rng, n);
    const Vector w = random_vector(rng, n);
    if (!probe(v, w)) return r;
  }
  return r;
}

BilinearForm form_from_q(const QuadraticForm& q, std::size_t trials, std::uint64_t seed) {
  if (!q.is_diagonal()) {
    const auto report = quasilinearity_check(q, trials, seed);
    if (report.kind != Quasilinearity::Strict) {
      throw DomainError("B_Q needs a strictly quasilinear Q; the check returned " + to_string(report.kind) +
                        (report.counterexample ? ": " + *report.counterexample : std::string()));
    }
  }
  const std::size_t n = q.dim();
  std::vector<Scalar> base(n);
  for (std::size_t i = 0; i < n; ++i) base[i] = q_eval(q, Vector::unit(n, i));
  Matrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = power(base[i] * base[j], half());
  return BilinearForm(std::move(g));
}

BilinearForm hyperbolic_plane(const Scalar& a) {
  if (!a.is_tangible()) throw DomainError("hyperbolic plane needs a tangible pairing <e1,e2>, got " + to_string(a));
  return BilinearForm(Matrix{{Scalar::zero(), a}, {a, Scalar::zero()}});
}

bool is_hyperbolic_plane(const BilinearForm& f, const Vector& b1, const Vector& b2) {
  const std::vector<Vector> pair{b1, b2};
  if (!independent(pair)) throw DomainError("hyperbolic-plane test needs an independent pair {b1, b2}");
  const Scalar q1 = f(b1, b1);
  const Scalar q2 = f(b2, b2);
  if (!q1.in_ghost_ideal() || !q2.in_ghost_ideal()) return false;
  const Vector sum = b1 + b2;
  return nu_less(q1 + q2, f(sum, sum));
}

QuadraticForm orthogonal_sum(const QuadraticForm& q1, const QuadraticForm& q2) {
  if (q1.is_diagonal() != q2.is_diagonal()) {
    throw DomainError("orthogonal sum needs both forms diagonal or both form-backed; convert one first");
  }
  if (q1.is_diagonal()) {
    auto c = q1.coefficients().coefficients;
    const auto& rest = q2.coefficients().coefficients;
    c.insert(c.end(), rest.begin(), rest.end());
    return QuadraticForm::diagonal(std::move(c));
  }
  const Matrix& g1 = q1.form().gram();
  const Matrix& g2 = q2.form().gram();
  const std::size_t n1 = g1.rows();
  const std::size_t n2 = g2.rows();
  Matrix g(n1 + n2, n1 + n2);
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n1; ++j) g(i, j) = g1(i, j);
  for (std::size_t i = 0; i < n2; ++i)
    for (std::size_t j = 0; j < n2; ++j) g(n1 + i, n1 + j) = g2(i, j);
  return QuadraticForm(BilinearForm(std::move(g)));
}

DiagonalConversion to_diagonal(const QuadraticForm& q, std::size_t trials, std::uint64_t seed) {
  const std::size_t n = q.dim();
  std::vector<Vector> base;
  for (std::size_t i = 0; i < n; ++i) base.push_back(Vector::unit(n, i));
  if (q.is_diagonal()) return {q, std::move(base)};
  if (!is_supertropically_symmetric(q.form())) {
    throw DomainError("diagonal conversion needs a supertropically symmetric form");
  }
  const auto report = quasilinearity_check(q, trials, seed);
  if (report.kind != Quasilinearity::Strict) {
    throw DomainError("diagonal conversion needs a strictly quasilinear Q; the check returned " + to_string(report.kind));
  }
  std::vector<Scalar> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = q_eval(q, base[i]);
  return {QuadraticForm::diagonal(std::move(c)), std::move(base)};
}

std::vector<QuadraticForm> split_diagonal(const QuadraticForm& q) {
  std::vector<QuadraticForm> out;
  for (const auto& c : q.coefficients().coefficients) out.push_back(QuadraticForm::diagonal({c}));
  return out;
}

QuadraticForm anisotropic_part(const BilinearForm& f, const Decomposition& d) {
  if (d.anisotropic.empty()) throw DomainError("decomposition has no anisotropic part");
  std::vector<Scalar> c;
  for (const auto& a : d.anisotropic) c.push_back(f(a, a));
  return QuadraticForm::diagonal(std::move(c));
}

}  // namespace supertrop
