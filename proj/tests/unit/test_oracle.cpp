#include <json.hpp>

#include <doctest.h>

#include "reference.hpp"
#include "supertrop/error.hpp"
#include "supertrop/oracle.hpp"
#include "supertrop/quasi_inverse.hpp"
#include "supertrop/rank.hpp"

using namespace supertrop;
using namespace supertrop::oracle;
using ref::cols;
using ref::M;
using ref::S;

TEST_CASE("brute-force determinant") {
  CHECK(brute_force_det(M("0 1; 2 0")).value == S("3"));
  const DetResult tie = brute_force_det(M("1 2; 3 4"));
  CHECK(tie.value == S("5g"));
  REQUIRE(tie.witnesses.size() == 2);
  CHECK(tie.witnesses[0] == Permutation{0, 1});
  CHECK(tie.witnesses[1] == Permutation{1, 0});
  CHECK(brute_force_det(M("0 2 1; 1 0 3; 2 -1 0")).value == S("7"));
  CHECK(brute_force_det(M("-inf -inf; -inf 0")).value.is_zero());
  CHECK(brute_force_det(Matrix::identity(8)).value == Scalar::one());
  CHECK_THROWS_AS(brute_force_det(Matrix::identity(9)), CapacityError);
  CHECK_THROWS_AS(brute_force_det(M("0 1")), DimensionError);
}

TEST_CASE("grid dependence search") {
  const std::vector<GroupValue> grid{GroupValue(-1), GroupValue(0), GroupValue(1)};
  const auto same = cols("0 0; 1 1");
  const auto w = dependence_search(same, grid);
  REQUIRE(w);
  CHECK(is_ghost_vector(lin_comb(*w, same)));

  CHECK_FALSE(dependence_search(ref::standard_base(3), grid));
  CHECK_FALSE(dependence_search(std::vector<Vector>{}, grid));

  const auto shifted = cols("0 1; 0 1");
  const auto ws = dependence_search(shifted, grid);
  REQUIRE(ws);
  CHECK(nu_cmp((*ws)[0], S("0")) == NuOrder::Match);
  CHECK(nu_cmp((*ws)[1], S("-1")) == NuOrder::Match);
  // Dependent, but only with coefficients off the grid.
  const auto far = cols("0 5; 1 6");
  CHECK_FALSE(dependence_search(far, grid));
  CHECK_FALSE(independent(far));
}

TEST_CASE("property: a dependence witness contradicts independence") {
  const std::vector<GroupValue> grid{GroupValue(-2), GroupValue(-1), GroupValue(0), GroupValue(1), GroupValue(2)};
  const SamplerConfig cfg{-2, 2, 0.2, 0.1, 10};
  std::size_t found = 0;
  for (std::uint64_t i = 0; i < 200; ++i) {
    TrialRng rng(61, i);
    const std::size_t n = 2 + i % 2;
    const auto vs = draw_matrix(rng, n, n, cfg).columns();
    const auto w = dependence_search(vs, grid);
    if (!w) continue;
    ++found;
    REQUIRE(is_ghost_vector(lin_comb(*w, vs)));
    REQUIRE_FALSE(independent(vs));
  }
  CHECK(found > 20);
}

TEST_CASE("samplers") {
  const SamplerConfig cfg{};
  TrialRng rng(1, 2);
  for (int i = 0; i < 100; ++i) {
    const Scalar t = draw_tangible(rng, cfg);
    CHECK(t.is_tangible());
    CHECK(t.value() >= GroupValue(cfg.lo));
    CHECK(t.value() <= GroupValue(cfg.hi));
  }
  CHECK(is_tangible_vector(draw_tangible_vector(rng, 4, cfg)));
  CHECK(det_value(draw_nonsingular(rng, 4, cfg)).is_tangible());
  const Matrix g = draw_symmetric_gram(rng, 4, cfg);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (i != j) CHECK(g(i, j) == g(j, i));
  CHECK(is_closed_base(draw_closed_base(rng, 3, cfg)));

  const SamplerConfig hopeless{0, 0, 0.0, 0.0, 3};
  CHECK_THROWS_AS(draw_nonsingular(rng, 2, hopeless), DomainError);
}

TEST_CASE("samples are deterministic in seed and index") {
  for (const char* name :
       {"scalar", "tangible-scalar", "vector", "matrix", "nonsingular-matrix", "symmetric-gram", "closed-base"}) {
    CAPTURE(name);
    const auto kind = parse_sample_kind(name);
    REQUIRE(kind);
    CHECK(sample(*kind, 3, 3, 7, 11) == sample(*kind, 3, 3, 7, 11));
  }
  CHECK(sample(SampleKind::Matrix, 4, 4, 7, 11) != sample(SampleKind::Matrix, 4, 4, 7, 12));
  CHECK(std::get<Matrix>(sample(SampleKind::Matrix, 2, 3, 1, 0)).cols() == 3);
  CHECK(std::get<Vector>(sample(SampleKind::Vector, 5, 1, 1, 0)).dim() == 5);
  CHECK_FALSE(parse_sample_kind("tensor"));
}

TEST_CASE("suites") {
  CHECK(suite_names().size() == 13);
  CHECK(suite_names().front() == "frobenius");
  CHECK_THROWS_WITH_AS(run_suite("nope", 1, 0), doctest::Contains("unknown suite"), DomainError);

  const TrialReport f = run_suite("frobenius", 1000, 7);
  CHECK(f.verdict == Verdict::Pass);
  CHECK(f.failures.empty());
  CHECK(f.trials == 1000);

  CHECK(run_suite("det-engines", 500, 7).verdict == Verdict::Pass);
  CHECK(run_suite("quasi-identity", 200, 7).verdict == Verdict::Pass);
  for (const auto& name : suite_names()) {
    CAPTURE(name);
    CHECK(run_suite(name, 40, 3).verdict == Verdict::Pass);
  }
}

TEST_CASE("reports are deterministic and serialize in a fixed order") {
  const TrialReport a = run_suite("cs-gram", 100, 5);
  CHECK(a == run_suite("cs-gram", 100, 5));
  const auto j = nlohmann::ordered_json::parse(a.to_json());
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"suite", "trials", "seed", "verdict", "failures"});
  CHECK(j["verdict"] == "pass");
  CHECK(j["seed"] == 5);
  CHECK(to_string(Verdict::Counterexample) == "counterexample");
  CHECK(to_string(Verdict::Proved) == "proved");
}
