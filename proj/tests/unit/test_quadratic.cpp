#include <doctest.h>

#include "reference.hpp"
#include "supertrop/error.hpp"
#include "supertrop/oracle.hpp"
#include "supertrop/quadratic.hpp"

using namespace supertrop;
using ref::M;
using ref::S;
using ref::V;

namespace {

const Vector e1 = V("0 -inf");
const Vector e2 = V("-inf 0");
const oracle::SamplerConfig kSmall{-5, 5, 0.2, 0.1, 200};

QuadraticForm diag(std::string_view coefficients) {
  const Vector c = V(coefficients);
  return QuadraticForm::diagonal(std::vector<Scalar>(c.begin(), c.end()));
}

}  // namespace

TEST_CASE("evaluation of both representations") {
  CHECK(q_eval(diag("0 2"), V("1 1")) == S("4"));
  CHECK(q_eval(diag("0 0"), V("1 1")) == S("2g"));
  CHECK(q_eval(diag("0g 2"), V("3 -inf")) == S("6g"));
  CHECK(q_eval(QuadraticForm(BilinearForm(M("0 -inf; -inf 2"))), V("1 1")) == S("4"));
  CHECK_THROWS_AS(q_eval(diag("0 2"), V("1 1 1")), DimensionError);
  CHECK_THROWS_AS(QuadraticForm::diagonal({}), DimensionError);

  CHECK(diag("0 2").is_diagonal());
  CHECK(diag("0 2").dim() == 2);
  CHECK_THROWS_AS(diag("0 2").form(), DomainError);
  CHECK_THROWS_AS(QuadraticForm(BilinearForm(Matrix::identity(2))).coefficients(), DomainError);
}

TEST_CASE("worked examples: hyperbolic and non-symmetric planes") {
  const QuadraticForm hyp(BilinearForm(M("-inf 0; 0 -inf")));
  CHECK(q_eval(hyp, e1 + e2) == S("0g"));
  CHECK(q_eval(hyp, e1).is_zero());

  const QuadraticForm rise(BilinearForm(M("-inf 0; -inf -inf")));
  CHECK(q_eval(rise, e1 + e2) == S("0"));
  CHECK(q_eval(rise, e1).is_zero());
  CHECK(q_eval(rise, e2).is_zero());
}

TEST_CASE("quasilinearity verdicts") {
  const auto d = quasilinearity_check(diag("0 2"), 50, 1);
  CHECK(d.kind == Quasilinearity::Strict);
  CHECK(d.analytic);
  CHECK(d.trials == 0);

  const auto id = quasilinearity_check(QuadraticForm(BilinearForm(Matrix::identity(2))), 50, 1);
  CHECK(id.kind == Quasilinearity::Strict);
  CHECK_FALSE(id.analytic);
  CHECK(id.trials == 51);

  const auto hyp = quasilinearity_check(QuadraticForm(hyperbolic_plane(S("0"))), 50, 1);
  CHECK(hyp.kind == Quasilinearity::Quasilinear);
  REQUIRE(hyp.counterexample);

  const auto rise = quasilinearity_check(QuadraticForm(BilinearForm(M("-inf 0; -inf -inf"))), 50, 1);
  CHECK(rise.kind == Quasilinearity::Neither);
  CHECK(rise.trials == 1);
  CHECK(to_string(Quasilinearity::Neither) == "neither");
}

TEST_CASE("the associated bilinear form") {
  CHECK(form_from_q(diag("0 2")).gram() == M("0 1; 1 2"));
  CHECK(form_from_q(diag("0g 2")).gram() == M("0g 1g; 1g 2"));
  CHECK(form_from_q(diag("1 -inf")).gram() == M("1 -inf; -inf -inf"));
  CHECK(form_from_q(QuadraticForm(BilinearForm(Matrix::identity(2)))).gram() == M("0 0; 0 0"));
  CHECK_THROWS_AS(form_from_q(QuadraticForm(hyperbolic_plane(S("0")))), DomainError);
}

TEST_CASE("hyperbolic planes") {
  CHECK(hyperbolic_plane(S("2")).gram() == M("-inf 2; 2 -inf"));
  CHECK_THROWS_AS(hyperbolic_plane(S("2g")), DomainError);
  CHECK_THROWS_AS(hyperbolic_plane(Scalar::zero()), DomainError);

  CHECK(is_hyperbolic_plane(hyperbolic_plane(S("2")), e1, e2));
  CHECK_FALSE(is_hyperbolic_plane(BilinearForm(Matrix::identity(2)), e1, e2));
  CHECK(is_hyperbolic_plane(BilinearForm(M("-inf 0g; 0g -inf")), e1, e2));
  const BilinearForm ghostly(M("0g 5; 5 0g"));
  CHECK(is_hyperbolic_plane(ghostly, e1, e2));
  CHECK(ghostly(e1 + e2, e1 + e2) == S("5g"));
  CHECK(q_eval(QuadraticForm(hyperbolic_plane(S("5"))), e1 + e2) == S("5g"));
  CHECK_THROWS_AS(is_hyperbolic_plane(hyperbolic_plane(S("2")), e1, e1), DomainError);
}

TEST_CASE("orthogonal sums, diagonalization and splitting") {
  CHECK(orthogonal_sum(diag("0"), diag("2 1g")) == diag("0 2 1g"));
  const QuadraticForm s =
      orthogonal_sum(QuadraticForm(BilinearForm(M("1"))), QuadraticForm(hyperbolic_plane(S("0"))));
  CHECK(s.form().gram() == M("1 -inf -inf; -inf -inf 0; -inf 0 -inf"));
  CHECK_THROWS_AS(orthogonal_sum(diag("0"), QuadraticForm(BilinearForm(M("1")))), DomainError);

  const auto conv = to_diagonal(QuadraticForm(BilinearForm(M("1 -inf; -inf 2"))));
  CHECK(conv.diagonal == diag("1 2"));
  CHECK(conv.base == ref::standard_base(2));
  CHECK(to_diagonal(diag("3")).diagonal == diag("3"));
  CHECK_THROWS_AS(to_diagonal(QuadraticForm(hyperbolic_plane(S("0")))), DomainError);
  CHECK_THROWS_AS(to_diagonal(QuadraticForm(BilinearForm(M("-inf 0; -inf -inf")))), DomainError);

  const auto parts = split_diagonal(diag("0 2 1g"));
  REQUIRE(parts.size() == 3);
  CHECK(parts[2] == diag("1g"));
}

TEST_CASE("anisotropic part of a decomposition") {
  const BilinearForm block(M("0 -inf -inf; -inf -inf 0; -inf 0 -inf"));
  const Decomposition d = decompose(block, ref::standard_base(3));
  CHECK(anisotropic_part(block, d) == diag("0"));
  const BilinearForm hyp = hyperbolic_plane(S("0"));
  CHECK_THROWS_AS(anisotropic_part(hyp, decompose(hyp, ref::standard_base(2))), DomainError);
}

TEST_CASE("property: quasilinearity axioms for symmetric forms") {
  for (std::uint64_t i = 0; i < 300; ++i) {
    TrialRng rng(51, i);
    const std::size_t n = 1 + i % 5;
    const QuadraticForm q(BilinearForm(oracle::draw_symmetric_gram(rng, n, kSmall)));
    const Vector v = oracle::draw_vector(rng, n, kSmall);
    const Vector w = oracle::draw_vector(rng, n, kSmall);
    const Scalar a = oracle::draw_scalar(rng, kSmall);
    REQUIRE(q_eval(q, a * v) == a * a * q_eval(q, v));
    REQUIRE(ghost_surpasses(q_eval(q, v + w), q_eval(q, v) + q_eval(q, w)));
    REQUIRE(quasilinearity_check(q, 20, i).kind != Quasilinearity::Neither);
  }
}

TEST_CASE("property: diagonal forms and their bilinear forms") {
  for (std::uint64_t i = 0; i < 200; ++i) {
    TrialRng rng(52, i);
    const std::size_t n = 1 + i % 5;
    const Vector c = oracle::draw_vector(rng, n, kSmall);
    const QuadraticForm q = QuadraticForm::diagonal(std::vector<Scalar>(c.begin(), c.end()));
    const BilinearForm b = form_from_q(q);
    REQUIRE(is_supertropically_symmetric(b));
    REQUIRE(b.gram() == b.gram().transpose());
    for (int t = 0; t < 20; ++t) {
      const Vector v = oracle::draw_vector(rng, n, kSmall);
      const Vector w = oracle::draw_vector(rng, n, kSmall);
      CAPTURE(c);
      CAPTURE(v);
      CAPTURE(w);
      REQUIRE(b(v, v) == q_eval(q, v));
      REQUIRE(q_eval(q, v + w) == q_eval(q, v) + q_eval(q, w));
      REQUIRE(nu_cmp(b(v, w) * b(v, w), q_eval(q, v) * q_eval(q, w)) != NuOrder::Gt);
    }

    // Splitting and re-summing returns the same form.
    const auto parts = split_diagonal(q);
    QuadraticForm sum = parts.front();
    for (std::size_t k = 1; k < parts.size(); ++k) sum = orthogonal_sum(sum, parts[k]);
    REQUIRE(sum == q);
  }
}

TEST_CASE("property: orthogonal sums evaluate blockwise") {
  for (std::uint64_t i = 0; i < 200; ++i) {
    TrialRng rng(53, i);
    const std::size_t n1 = 1 + i % 3;
    const std::size_t n2 = 1 + (i / 3) % 3;
    const QuadraticForm q1(BilinearForm(oracle::draw_matrix(rng, n1, n1, kSmall)));
    const QuadraticForm q2(BilinearForm(oracle::draw_matrix(rng, n2, n2, kSmall)));
    const Vector v = oracle::draw_vector(rng, n1, kSmall);
    const Vector w = oracle::draw_vector(rng, n2, kSmall);
    std::vector<Scalar> joined(v.begin(), v.end());
    joined.insert(joined.end(), w.begin(), w.end());
    REQUIRE(q_eval(orthogonal_sum(q1, q2), Vector(joined)) == q_eval(q1, v) + q_eval(q2, w));
  }
}

TEST_CASE("property: the anisotropic part records self-pairings") {
  for (std::uint64_t i = 0; i < 100; ++i) {
    TrialRng rng(54, i);
    const std::size_t n = 1 + i % 5;
    const BilinearForm f(oracle::draw_symmetric_gram(rng, n, kSmall));
    const Decomposition d = decompose(f, ref::standard_base(n));
    if (d.anisotropic.empty()) continue;
    const QuadraticForm a = anisotropic_part(f, d);
    REQUIRE(a.dim() == d.anisotropic.size());
    for (std::size_t k = 0; k < d.anisotropic.size(); ++k) {
      REQUIRE(a.coefficients().coefficients[k] == f(d.anisotropic[k], d.anisotropic[k]));
      REQUIRE(a.coefficients().coefficients[k].is_tangible());
    }
  }
}
