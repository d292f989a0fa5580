#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include <json.hpp>

#include "supertrop/dual.hpp"
#include "supertrop/error.hpp"
#include "supertrop/io.hpp"
#include "supertrop/oracle.hpp"
#include "supertrop/quadratic.hpp"
#include "supertrop/quasi_inverse.hpp"
#include "supertrop/rank.hpp"

namespace supertrop::oracle {

namespace {

using Outcome = std::optional<Failure>;
using Trial = std::function<Outcome(std::size_t index, std::uint64_t seed)>;

std::string show(const Matrix& m) {
  std::string s = format_matrix(m);
  std::replace(s.begin(), s.end(), '\n', ';');
  return "[" + s + "]";
}

std::string show(const Vector& v) { return "(" + format_vector(v) + ")"; }

std::string show(std::span<const Vector> vs) {
  std::string s;
  for (const auto& v : vs) s += (s.empty() ? "" : " ") + show(v);
  return "{" + s + "}";
}

Failure fail(std::string input, std::string expected, std::string got) {
  return {0, std::move(input), std::move(expected), std::move(got)};
}

// Diagonal exactly 1, everything else in G0.
bool unit_pattern(const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (i == j ? !(m(i, j) == Scalar::one()) : !m(i, j).in_ghost_ideal()) return false;
    }
  return true;
}

std::set<Permutation> as_set(const std::vector<Permutation>& ps) { return {ps.begin(), ps.end()}; }

std::vector<Vector> standard_base(std::size_t n) {
  std::vector<Vector> b;
  for (std::size_t i = 0; i < n; ++i) b.push_back(Vector::unit(n, i));
  return b;
}

const SamplerConfig kDefault{};

// Entries in [-5, 5] keep the many-term sums in suites small.
const SamplerConfig kSmall{-5, 5, 0.2, 0.1, 200};

Outcome frobenius(std::size_t i, std::uint64_t seed) {
  TrialRng rng(seed, i, 1);
  const Scalar a = draw_scalar(rng, kDefault);
  const Scalar b = draw_scalar(rng, kDefault);
  for (long m = 1; m <= 5; ++m) {
    const Scalar lhs = power(a + b, m);
    const Scalar rhs = power(a, m) + power(b, m);
    if (!(lhs == rhs)) {
      return fail("a = " + to_string(a) + ", b = " + to_string(b) + ", m = " + std::to_string(m),
                  "(a+b)^m = a^m + b^m = " + to_string(rhs), to_string(lhs));
    }
  }
  return std::nullopt;
}

Outcome quasi_identity(std::size_t i, std::uint64_t seed) {
  TrialRng rng(seed, i, 2);
  const std::size_t n = 1 + i % 5;
  const Matrix a = draw_nonsingular(rng, n, kDefault);
  const auto q = quasi_identities(a);
  const Matrix id = Matrix::identity(n);
  for (const auto* m : {&q.left, &q.right}) {
    const char* which = m == &q.left ? "I_A" : "I'_A";
    if (!is_quasi_identity(*m)) return fail(show(a), std::string(which) + " is a quasi-identity", show(*m));
    if (!(*m * *m == *m)) return fail(show(a), std::string(which) + "^2 = " + which, show(*m * *m));
    const Scalar d = det_value(*m);
    if (!(d == Scalar::one())) return fail(show(a), std::string("det ") + which + " = 0", to_string(d));
    if (!ghost_surpasses(*m, id)) return fail(show(a), std::string(which) + " |= Id", show(*m));
  }
  return std::nullopt;
}

Outcome det_engines(std::size_t i, std::uint64_t seed) {
  TrialRng rng(seed, i, 3);
  const std::size_t n = 2 + i % 5;
  const Matrix a = draw_matrix(rng, n, n, kDefault);
  const DetResult brute = brute_force_det(a);
  const DetResult expand = det(a);
  const DetResult assign = det_assignment(a);
  const std::string want = to_string(brute.value);
  if (!(expand.value == brute.value)) return fail(show(a), "expand = " + want, to_string(expand.value));
  if (!(assign.value == brute.value)) return fail(show(a), "assign = " + want, to_string(assign.value));
  const auto all = as_set(brute.witnesses);
  if (as_set(expand.witnesses) != all) return fail(show(a), "expand lists every witness", "different witness set");
  for (const auto& p : assign.witnesses) {
    if (!all.count(p)) return fail(show(a), "assign witnesses are nu-maximal", "a non-maximal permutation");
  }
  if (assign.tied() != brute.tied()) {
    return fail(show(a), std::string("assign tie = ") + (brute.tied() ? "yes" : "no"), assign.tied() ? "yes" : "no");
  }
  return std::nullopt;
}

Outcome dual_base_trial(std::size_t i, std::uint64_t seed) {
  TrialRng rng(seed, i, 4);
  const std::size_t n = 1 + i % 5;
  const Matrix a = draw_closed_base(rng, n, kDefault);
  const DualBase d = dual_base(a);
  const Matrix grid = dual_eval_matrix(d);
  if (!unit_pattern(grid)) return fail(show(a), "eps_i(b_j): diagonal 0, off-diagonal in G0", show(grid));
  const std::size_t r = dual_rank(d);
  if (r != n) return fail(show(a), "dual rank " + std::to_string(n), std::to_string(r));
  return std::nullopt;
}

Outcome double_dual(std::size_t i, std::uint64_t seed) {
  TrialRng rng(seed, i, 4);
  const std::size_t n = 1 + i % 5;
  const Matrix a = draw_closed_base(rng, n, kDefault);
  const DualBase d = dual_base(a);
  const Matrix grid = double_dual_grid(d);
  if (!unit_pattern(grid)) return fail(show(a), "b_j**(eps_i): diagonal 0, off-diagonal in G0", show(grid));
  const Matrix phi = phi_matrix(d);
  const std::size_t r = rank(phi);
  if (r != n) return fail(show(a), "rank Phi = " + std::to_string(n), std::to_string(r));
  for (const auto* m : {&a, &phi}) {
    const auto monic = is_ghost_monic(*m, 16, seed);
    if (monic.certainty != Certainty::Proved) {
      return fail(show(*m), "ghost-monic: proved", to_string(monic.certainty));
    }
  }
  return std::nullopt;
}

// A supertropically symmetric form with tangible diagonal, and the
// orthogonal set Gram-Schmidt extracts from a few random vectors.
std::pair<BilinearForm, std::vector<Vector>> form_with_prefix(TrialRng& rng, std::size_t n, std::size_t k) {
  Matrix g = draw_symmetric_gram(rng, n, kSmall);
  for (std::size_t j = 0; j < n; ++j) g(j, j) = draw_tangible(rng, kSmall);
  BilinearForm f(std::move(g));
  std::vector<Vector> seeds;
  for (std::size_t j = 0; j < k; ++j) seeds.push_back(draw_vector(rng, n, kSmall));
  return {f, gram_schmidt(f, seeds).orthogonal};
}

Outcome gram_schmidt_trial(std::size_t i, std::uint64_t seed) {
  TrialRng rng(seed, i, 6);
  const std::size_t n = 2 + i % 4;
  auto [f, prefix] = form_with_prefix(rng, n, 1 + i % n);
  const Vector v = draw_vector(rng, n, kSmall);
  const std::string input = show(f.gram()) + " B = " + show(prefix) + " v = " + show(v);
  const GSResult r = gs_step(f, prefix, v);
  for (std::size_t j = 0; j < prefix.size(); ++j) {
    const Scalar p = f(r.corrected, prefix[j]);
    if (!p.in_ghost_ideal()) return fail(input, "<v', b_" + std::to_string(j) + "> in G0", to_string(p));
  }
  const Scalar lhs = f(r.corrected, r.corrected);
  const Scalar rhs = gs_self_pairing(f, prefix, v);
  if (!(lhs == rhs)) return fail(input, "<v', v'> = " + to_string(rhs), to_string(lhs));
  return std::nullopt;
}

Outcome cs1(std::size_t i, std::uint64_t seed) {
  TrialRng rng(seed, i, 7);
  const std::size_t n = 2 + i % 4;
  Matrix g = draw_symmetric_gram(rng, n, kSmall);
  for (std::size_t j = 0; j < n; ++j) g(j, j) = draw_tangible(rng, kSmall);
  const BilinearForm f(std::move(g));
  const auto base = gram_schmidt(f, standard_base(n)).orthogonal;
  if (base.empty()) return std::nullopt;
  auto combo = [&] {
    std::vector<Scalar> c(base.size());
    for (auto& x : c) x = draw_tangible(rng, kSmall);
    return lin_comb(c, base);
  };
  const Vector v = combo();
  const Vector w = combo();
  if (!pair_class(f, v, w).weakly_cauchy_schwartz) {
    return fail(show(f.gram()) + " v = " + show(v) + " w = " + show(w), "weakly Cauchy-Schwartz", "not weakly CS");
  }
  return std::nullopt;
}

Outcome quadlin(std::size_t i, std::uint64_t seed) {
  TrialRng rng(seed, i, 8);
  const std::size_t n = 1 + i % 5;
  std::vector<Scalar> coeffs(n);
  for (auto& c : coeffs) c = draw_scalar(rng, kSmall);
  const QuadraticForm q = QuadraticForm::diagonal(coeffs);
  const std::string input = "diag(" + format_vector(Vector(coeffs)) + ")";
  const BilinearForm b = form_from_q(q);
  if (!is_supertropically_symmetric(b)) return fail(input, "B_Q supertropically symmetric", show(b.gram()));
  for (int t = 0; t < 20; ++t) {
    const Vector v = draw_vector(rng, n, kSmall);
    const Vector w = draw_vector(rng, n, kSmall);
    const Scalar bvw = b(v, w);
    const Scalar qq = q_eval(q, v) * q_eval(q, w);
    if (!(bvw * bvw == qq)) {
      return fail(input + " v = " + show(v) + " w = " + show(w), "B_Q(v,w)^2 = " + to_string(qq), to_string(bvw * bvw));
    }
    if (!pair_class(b, v, w).weakly_cauchy_schwartz) {
      return fail(input + " v = " + show(v) + " w = " + show(w), "weakly Cauchy-Schwartz", "not weakly CS");
    }
  }
  const Scalar a = draw_tangible(rng, kSmall);
  if (!is_hyperbolic_plane(hyperbolic_plane(a), Vector::unit(2, 0), Vector::unit(2, 1))) {
    return fail("a = " + to_string(a), "hyperbolic_plane(a) is a hyperbolic plane", "false");
  }
  std::vector<Scalar> more(1 + i % 3);
  for (auto& c : more) c = draw_scalar(rng, kSmall);
  const QuadraticForm q2 = QuadraticForm::diagonal(more);
  const QuadraticForm sum = orthogonal_sum(q, q2);
  const Vector v1 = draw_vector(rng, n, kSmall);
  const Vector v2 = draw_vector(rng, more.size(), kSmall);
  std::vector<Scalar> joined(v1.begin(), v1.end());
  joined.insert(joined.end(), v2.begin(), v2.end());
  const Scalar lhs = q_eval(sum, Vector(joined));
  const Scalar rhs = q_eval(q, v1) + q_eval(q2, v2);
  if (!(lhs == rhs)) return fail(input + " (+) diag(" + format_vector(Vector(more)) + ")", to_string(rhs), to_string(lhs));
  return std::nullopt;
}

Outcome degen(std::size_t i, std::uint64_t seed) {
  TrialRng rng(seed, i, 9);
  for (std::size_t attempt = 0; attempt < 64; ++attempt) {
    const BilinearForm f(draw_symmetric_gram(rng, 2, kDefault));
    Vector v1 = Vector::unit(2, 0);
    Vector v2 = Vector::unit(2, 1);
    if (i % 2) {
      v1 = draw_tangible_vector(rng, 2, kDefault);
      v2 = draw_tangible_vector(rng, 2, kDefault);
    }
    const std::vector<Vector> span{v1, v2};
    if (!independent(span) || radical_member(f, span, v1) || radical_member(f, span, v2)) continue;
    const StripResult s = isotropic_strip(f, v1, v2);
    const std::string input = show(f.gram()) + " v1 = " + show(v1) + " v2 = " + show(v2);
    if (s.kind == StripResult::Kind::Empty) return fail(input, "nonempty strip", "empty");
    if (!s.verified) return fail(input, "<w,w> in G0 at the probe points", "tangible self-pairing");
    return std::nullopt;
  }
  return fail("seed " + std::to_string(seed), "a nondegenerate 2x2 form", "64 degenerate draws");
}

Outcome decompose_trial(std::size_t i, std::uint64_t seed) {
  TrialRng rng(seed, i, 10);
  const std::size_t n = 1 + i % 5;
  const BilinearForm f(draw_symmetric_gram(rng, n, kSmall));
  const std::vector<Vector> base = i % 2 ? draw_nonsingular(rng, n, kSmall).columns() : standard_base(n);
  const Decomposition d = decompose(f, base);
  const DecompositionCheck c = verify_decomposition(f, base.size(), d);
  if (!c.ok()) {
    std::string got;
    if (!c.anisotropic_orthogonal) got += " aniso-not-orthogonal";
    if (!c.anisotropic_nonisotropic) got += " aniso-isotropic";
    if (!c.anisotropic_cauchy_schwartz) got += " aniso-not-CS";
    if (!c.alternate_isotropic) got += " alternate-nonisotropic";
    if (!c.cross_ghost) got += " cross-tangible";
    if (!c.counts) got += " count-mismatch";
    return fail(show(f.gram()) + " base " + show(base), "all decomposition postconditions", got.substr(1));
  }
  return std::nullopt;
}

Outcome surpass_order(std::size_t i, std::uint64_t seed) {
  TrialRng rng(seed, i, 11);
  const Scalar a = draw_scalar(rng, kSmall);
  const Scalar b = draw_scalar(rng, kSmall);
  const Scalar c = draw_scalar(rng, kSmall);
  const std::string input = "a = " + to_string(a) + ", b = " + to_string(b) + ", c = " + to_string(c);
  if (!ghost_surpasses(a, a)) return fail(input, "a |= a", "false");
  if (ghost_surpasses(a, b) && ghost_surpasses(b, a) && !(a == b)) return fail(input, "antisymmetry", "a != b");
  if (ghost_surpasses(a, b) && ghost_surpasses(b, c) && !ghost_surpasses(a, c)) return fail(input, "transitivity", "false");
  if (ghost_surpasses(a, b)) {
    if (!ghost_surpasses(a + c, b + c)) return fail(input, "a+c |= b+c", "false");
    if (!ghost_surpasses(a * c, b * c)) return fail(input, "ac |= bc", "false");
  }
  // b + ghost always surpasses b.
  if (!ghost_surpasses(b + nu(c), b)) return fail(input, "b + nu(c) |= b", "false");
  return std::nullopt;
}

Outcome cs_gram(std::size_t i, std::uint64_t seed) {
  TrialRng rng(seed, i, 12);
  Matrix g = draw_symmetric_gram(rng, 2, kDefault);
  Vector v = Vector::unit(2, 0);
  Vector w = Vector::unit(2, 1);
  if (i % 2) {
    g = draw_symmetric_gram(rng, 3, kDefault);
    v = draw_tangible_vector(rng, 3, kDefault);
    w = draw_tangible_vector(rng, 3, kDefault);
  }
  for (std::size_t j = 0; j < g.rows(); ++j) g(j, j) = draw_tangible(rng, kDefault);
  const BilinearForm f(g);
  if (!f(v, v).is_tangible() || !f(w, w).is_tangible()) return std::nullopt;
  const std::vector<Vector> pair{v, w};
  const bool lhs = ghost_surpasses(f(v, w) * f(w, v), f(v, v) * f(w, w));
  const bool rhs = det_value(gram_of(f, pair)).in_ghost_ideal();
  if (lhs != rhs) {
    return fail(show(g) + " v = " + show(v) + " w = " + show(w),
                std::string("Gram det ghost = ") + (lhs ? "true" : "false"), rhs ? "true" : "false");
  }
  return std::nullopt;
}

Outcome semiring_laws(std::size_t i, std::uint64_t seed) {
  TrialRng rng(seed, i, 13);
  const Scalar a = draw_scalar(rng, kDefault);
  const Scalar b = draw_scalar(rng, kDefault);
  const Scalar c = draw_scalar(rng, kDefault);
  const std::string input = "a = " + to_string(a) + ", b = " + to_string(b) + ", c = " + to_string(c);
  if (!(a + b == b + a)) return fail(input, "a+b = b+a", to_string(a + b));
  if (!(a * b == b * a)) return fail(input, "ab = ba", to_string(a * b));
  if (!((a + b) + c == a + (b + c))) return fail(input, "associative +", to_string((a + b) + c));
  if (!((a * b) * c == a * (b * c))) return fail(input, "associative *", to_string((a * b) * c));
  if (!(a * (b + c) == a * b + a * c)) return fail(input, "a(b+c) = ab+ac", to_string(a * (b + c)));
  if (!(a + Scalar::zero() == a) || !(a * Scalar::one() == a)) return fail(input, "units", "wrong");
  if (!(a + a == nu(a))) return fail(input, "a+a = nu(a)", to_string(a + a));
  return std::nullopt;
}

const std::map<std::string, Trial, std::less<>>& catalog() {
  static const std::map<std::string, Trial, std::less<>> c{
      {"frobenius", frobenius},
      {"quasi-identity", quasi_identity},
      {"det-engines", det_engines},
      {"dual-base", dual_base_trial},
      {"double-dual", double_dual},
      {"gram-schmidt", gram_schmidt_trial},
      {"cs1", cs1},
      {"quadlin", quadlin},
      {"degen", degen},
      {"decompose", decompose_trial},
      {"surpass-order", surpass_order},
      {"cs-gram", cs_gram},
      {"semiring-laws", semiring_laws},
  };
  return c;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "pass";
    case Verdict::Counterexample:
      return "counterexample";
    case Verdict::Proved:
      return "proved";
  }
  return {};
}

std::string TrialReport::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["trials"] = trials;
  j["seed"] = seed;
  j["verdict"] = to_string(verdict);
  j["failures"] = nlohmann::ordered_json::array();
  for (const auto& f : failures) {
    j["failures"].push_back({{"index", f.index}, {"input", f.input}, {"expected", f.expected}, {"got", f.got}});
  }
  return j.dump();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"frobenius", "quasi-identity", "det-engines", "dual-base",  "double-dual",
                                              "gram-schmidt", "cs1",          "quadlin",     "degen",      "decompose",
                                              "surpass-order", "cs-gram",     "semiring-laws"};
  return names;
}

TrialReport run_suite(std::string_view name, std::size_t trials, std::uint64_t seed) {
  const auto it = catalog().find(name);
  if (it == catalog().end()) {
    std::string known;
    for (const auto& n : suite_names()) known += (known.empty() ? "" : ", ") + n;
    throw DomainError("unknown suite '" + std::string(name) + "' (known: " + known + ")");
  }
  TrialReport report{std::string(name), trials, seed, {}, Verdict::Pass};
  for (std::size_t i = 0; i < trials; ++i) {
    Outcome out;
    try {
      out = it->second(i, seed);
    } catch (const Error& e) {
      out = fail("trial " + std::to_string(i), "no error", e.what());
    }
    if (out) {
      out->index = i;
      report.failures.push_back(std::move(*out));
    }
  }
  if (!report.failures.empty()) report.verdict = Verdict::Counterexample;
  return report;
}

}  // namespace supertrop::oracle
