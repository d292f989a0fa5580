#include "supertrop/bilinear.hpp"

#include <string>

#include "supertrop/determinant.hpp"
#include "supertrop/error.hpp"
#include "supertrop/random.hpp"
#include "supertrop/rank.hpp"

namespace supertrop {

namespace {

void require_dim(const BilinearForm& f, const Vector& v, const char* what) {
  if (v.dim() != f.dim()) {
    throw DimensionError(std::string(what) + ": vector of dimension " + std::to_string(v.dim()) +
                         " against a form of dimension " + std::to_string(f.dim()));
  }
}

void require_symmetric(const BilinearForm& f, const char* what) {
  if (!is_supertropically_symmetric(f)) {
    throw DomainError(std::string(what) +
                      " needs a supertropically symmetric form (g_ij + g_ji in G0 for all i, j)");
  }
}

Scalar tangible_of(const GroupValue& v) { return Scalar::tangible(v); }

}  // namespace

BilinearForm::BilinearForm(Matrix gram) : gram_(std::move(gram)) { require_square(gram_, "bilinear form"); }

Scalar BilinearForm::operator()(const Vector& v, const Vector& w) const {
  require_dim(*this, v, "bilinear form");
  require_dim(*this, w, "bilinear form");
  Scalar out;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < w.dim(); ++j) out += v[i] * gram_(i, j) * w[j];
  }
  return out;
}

Matrix gram_of(const BilinearForm& f, std::span<const Vector> vs) {
  Matrix g(vs.size(), vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = 0; j < vs.size(); ++j) g(i, j) = f(vs[i], vs[j]);
  return g;
}

VectorClass classify_vector(const BilinearForm& f, const Vector& v) {
  VectorClass c;
  c.self_pairing = f(v, v);
  c.isotropic = c.self_pairing.in_ghost_ideal();
  c.normal = c.self_pairing == Scalar::one();
  return c;
}

Vector normalize(const BilinearForm& f, const Vector& v) {
  const Scalar q = f(v, v);
  if (!q.is_tangible()) {
    throw DomainError("cannot normalize a g-isotropic vector: <v,v> = " + to_string(q));
  }
  return inv(power(q, GroupValue::fraction(1, 2))) * v;
}

bool is_supertropically_symmetric(const BilinearForm& f) {
  const Matrix& g = f.gram();
  for (std::size_t i = 0; i < f.dim(); ++i)
    for (std::size_t j = i + 1; j < f.dim(); ++j)
      if (!(g(i, j) + g(j, i)).in_ghost_ideal()) return false;
  return true;
}

bool is_alternate(const BilinearForm& f, std::span<const Vector> base) {
  require_symmetric(f, "alternation test");
  for (const auto& b : base) {
    if (!classify_vector(f, b).isotropic) return false;
  }
  if (base.empty()) return true;
  constexpr std::size_t kSpotChecks = 16;
  for (std::size_t t = 0; t < kSpotChecks; ++t) {
    TrialRng rng(0, t, 0x616c74);
    std::vector<Scalar> coeffs(base.size());
    for (auto& c : coeffs) {
      if (!rng.chance(0.2)) c = Scalar::tangible(rng.uniform(-5, 5));
    }
    if (!classify_vector(f, lin_comb(coeffs, base)).isotropic) return false;
  }
  return true;
}

PairClass pair_class(const BilinearForm& f, const Vector& v, const Vector& w) {
  const Scalar vv = f(v, v);
  const Scalar ww = f(w, w);
  const Scalar vw = f(v, w);
  const Scalar wv = f(w, v);
  const Scalar diag = vv + ww;
  const Scalar cross = vw + wv;
  const Scalar product = vv * ww;
  const Scalar squares = vw * vw + wv * wv;

  PairClass p;
  p.left_orthogonal = vw.in_ghost_ideal();
  p.right_orthogonal = wv.in_ghost_ideal();
  p.compatible = nu_less_equal(cross, diag);
  p.strictly_compatible = p.compatible && (nu_matched(vv, ww) || nu_less(cross, diag));
  p.weakly_cauchy_schwartz = nu_less_equal(squares, product);
  p.cauchy_schwartz = nu_less(squares, product);
  const Matrix g{{vv, vw}, {wv, ww}};
  p.corner_singular = is_corner_singular(g);
  return p;
}

bool is_corner_singular(const Matrix& g) {
  if (g.rows() != 2 || g.cols() != 2) {
    throw DimensionError("corner-singularity test needs a 2x2 Gram matrix");
  }
  const Scalar& a11 = g(0, 0);
  const Scalar& a12 = g(0, 1);
  const Scalar& a21 = g(1, 0);
  const Scalar& a22 = g(1, 1);
  if (a11.is_zero()) return a12.is_zero() && a21.is_zero() && a22.is_zero();
  if (a12.is_zero()) return a21.is_zero() && a22.is_zero();
  if (a21.is_zero() || a22.is_zero()) return false;
  const GroupValue beta = a12.value() - a11.value();
  return a21.value() == a12.value() && a22.value() == a11.value() + beta + beta;
}

bool radical_member(const BilinearForm& f, std::span<const Vector> spanners, const Vector& v) {
  for (const auto& s : spanners) {
    if (!f(v, s).in_ghost_ideal()) return false;
  }
  return true;
}

GramDependence gram_dependent(const BilinearForm& f, std::span<const Vector> vs) {
  GramDependence out;
  if (vs.empty()) {
    out.gram_det = Scalar::one();
    out.independent_by_rank = true;
    return out;
  }
  out.gram_det = det_value(gram_of(f, vs));
  out.dependent = out.gram_det.in_ghost_ideal();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (radical_member(f, vs, vs[i])) {
      out.nondegenerate = false;
      out.warning = "degenerate span: spanner " + std::to_string(i) +
                    " lies in the radical, so a ghost Gram determinant does not imply dependence";
      break;
    }
  }
  out.independent_by_rank = independent(vs);
  if (out.dependent && out.nondegenerate && out.independent_by_rank) {
    out.consistent = false;
    out.warning = "ghost Gram determinant " + to_string(out.gram_det) +
                  " on a nondegenerate span, yet the vectors are independent by minor rank";
  }
  return out;
}

std::vector<std::optional<GroupValue>> strip_probes(const StripResult& s) {
  switch (s.kind) {
    case StripResult::Kind::Empty:
      return {};
    case StripResult::Kind::Point:
      return {s.at};
    case StripResult::Kind::Interval:
      break;
  }
  if (s.all) return {GroupValue(-1), GroupValue(0), GroupValue(1)};
  const GroupValue& hi = *s.hi;
  if (!s.lo) return {hi, hi - GroupValue(1), hi - GroupValue(2)};
  return {*s.lo, hi, (*s.lo + hi) * GroupValue::fraction(1, 2)};
}

Vector strip_vector(const StripResult& s, const Vector& v1, const Vector& v2, const std::optional<GroupValue>& b) {
  const Vector& first = s.swapped ? v2 : v1;
  const Vector& second = s.swapped ? v1 : v2;
  const Scalar beta = b ? tangible_of(*b) : Scalar::zero();
  return first + beta * second;
}

StripResult isotropic_strip(const BilinearForm& f, const Vector& v1, const Vector& v2) {
  require_symmetric(f, "isotropic strip");
  StripResult s;
  Scalar a11 = f(v1, v1);
  Scalar a22 = f(v2, v2);
  const Scalar alpha = f(v1, v2) + f(v2, v1);
  if (nu_cmp(a11, a22) == NuOrder::Gt) {
    std::swap(a11, a22);
    s.swapped = true;
  }

  if (a22.is_zero() && alpha.is_zero()) {
    s.kind = StripResult::Kind::Empty;
    s.note = "degenerate plane: every pairing of v1, v2 is -inf";
    return s;
  }
  if (a22.is_zero()) {
    // Both self-pairings vanish: <w,w> = alpha beta, a ghost, for every beta.
    s.kind = StripResult::Kind::Interval;
    s.all = true;
  } else if (!alpha.is_zero() && nu_less(a11 * a22, alpha * alpha)) {
    s.kind = StripResult::Kind::Interval;
    if (!a11.is_zero()) s.lo = a11.value() - alpha.value();
    s.hi = alpha.value() - a22.value();
  } else {
    s.kind = StripResult::Kind::Point;
    if (a11.is_zero()) {
      s.note = "beta = -inf: the first vector is already g-isotropic";
    } else {
      s.at = (a11.value() - a22.value()) * GroupValue::fraction(1, 2);
    }
  }

  s.verified = true;
  for (const auto& b : strip_probes(s)) {
    const Vector w = strip_vector(s, v1, v2, b);
    if (!f(w, w).in_ghost_ideal()) s.verified = false;
  }
  return s;
}

}  // namespace supertrop
