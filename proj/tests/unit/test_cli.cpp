#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include <doctest.h>

#include "cli.hpp"
#include "reference.hpp"
#include "supertrop/determinant.hpp"
#include "supertrop/oracle.hpp"

using supertrop::cli::ExitCode;
using Json = nlohmann::ordered_json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = supertrop::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(SUPERTROP_TEST_DATA) + "/" + name; }

}  // namespace

TEST_CASE("determinants") {
  CHECK(run({"det", "--inline", "0 1; 2 0"}).out == "3\n");
  CHECK(run({"det", data("tie.txt")}).out == "5g\n");
  CHECK(run({"det", "--engine", "assign", data("tie.txt")}).out == "5g\n");

  const Run j = run({"det", "--inline", "1 2; 3 4", "--format", "json"});
  REQUIRE(j.code == ExitCode::kOk);
  const auto doc = Json::parse(j.out);
  CHECK(doc["schema"] == "supertrop/1");
  CHECK(doc["command"] == "det");
  CHECK(doc["value"] == "5g");
  CHECK(doc["witnesses"].size() == 2);
  CHECK(doc.begin().key() == "schema");
}

TEST_CASE("exit codes") {
  CHECK(run({"pinv", data("tie.txt")}).code == ExitCode::kDomain);
  CHECK(run({"pinv", data("tie.txt")}).err.find("singular matrix") != std::string::npos);
  CHECK(run({"det", data("ragged.txt")}).code == ExitCode::kParse);
  CHECK(run({"det", data("missing.txt")}).code == ExitCode::kParse);
  CHECK(run({"det"}).code == ExitCode::kParse);
  CHECK(run({"frobnicate"}).code == ExitCode::kParse);
  CHECK(run({}).code == ExitCode::kParse);
  CHECK(run({"det", "--inline", "1 2", "--engine", "magic"}).code == ExitCode::kParse);
  CHECK(run({"check", "nope"}).code == ExitCode::kDomain);
  CHECK(run({"dualbase", "--inline", "0 1; 2 0"}).code == ExitCode::kDomain);
  CHECK(run({"normalize"}).code == ExitCode::kParse);
  CHECK(run({"--help"}).code == ExitCode::kOk);
}

TEST_CASE("matrix commands print parseable matrices") {
  const Run p = run({"pinv", "--inline", "0 2 1; 1 0 3; 2 -1 0"});
  REQUIRE(p.code == ExitCode::kOk);
  CHECK(ref::M(p.out) == ref::M("-5 -5 -2; -2 -4 -4; -5 -3 -4"));
  CHECK(ref::M(run({"adj", "--inline", "0 2 1; 1 0 3; 2 -1 0"}).out) == ref::M("2 2 5; 5 3 3; 2 4 3"));
  CHECK(ref::M(run({"close", "--inline", "0 1; 2 0"}).out) == ref::M("0g 1; 2 0g"));
  CHECK(ref::M(run({"dualgrid", "--inline", "0g 1; 2 0g"}).out) == ref::M("0 -2g; -1g 0"));
  CHECK(ref::M(run({"dualgrid", "--literal", "--inline", "0g 1; 2 0g"}).out) == ref::M("1g 2; 1 0g"));
  CHECK(run({"rank", "--inline", "1 2; 3 4"}).out == "1\n");
  CHECK(run({"indep", "--inline", "0 -inf; -inf 0"}).out == "true\n");

  const Run q = run({"quasiid", "--inline", "0 1; 2 0"});
  CHECK(q.out == "# I_A\n0 -2g\n-1g 0\n# I'_A\n0 -2g\n-1g 0\n");
  const auto doc = Json::parse(run({"quasiid", "--inline", "0 1; 2 0", "--format", "json"}).out);
  CHECK(doc["left"]["rows"][0][1] == "-2g");
}

TEST_CASE("forms") {
  CHECK(ref::M(run({"gram", "--inline", "0 -inf; -inf 0", "--vectors", "0 1; 0 -inf"}).out) == ref::M("0g 1; 1 2"));
  CHECK(run({"symmetric", "--inline", "-inf 0; -inf -inf"}).out == "false\n");

  const Run gs = run({"gs", "--inline", "0 -inf; -inf 0", "--base", "0; -inf", "--vector", "1 2"});
  CHECK(gs.out == "projected: 1 -inf\ncorrected: 1g 2\ndominant: 0\n");

  const auto strip = Json::parse(
      run({"strip", "--inline", "0 2; 2 0", "--v", "0 -inf", "--w", "-inf 0", "--format", "json"}).out);
  CHECK(strip["strip"]["kind"] == "interval");
  CHECK(strip["strip"]["lo"] == "-2");
  CHECK(strip["strip"]["hi"] == "2");

  const Run d = run({"decompose", data("block.txt"), "--format", "json"});
  REQUIRE(d.code == ExitCode::kOk);
  const auto dd = Json::parse(d.out);
  CHECK(dd["anisotropic"].size() == 1);
  CHECK(dd["alternate_source"] == Json::array({1, 2}));
  CHECK(run({"decompose", "--inline", "-inf 0; 0 -inf"}).out == "# anisotropic\n# none\n# alternate\n0 -inf\n-inf 0\n");
}

TEST_CASE("quadratic forms") {
  CHECK(run({"quad", "eval", "--diagonal", "--inline", "0 2", "--vector", "1 1"}).out == "4\n");
  CHECK(ref::M(run({"quad", "fromq", "--diagonal", "--inline", "0g 2"}).out) == ref::M("0g 1g; 1g 2"));
  CHECK(run({"quad", "check", "--inline", "-inf 0; -inf -inf"}).out.rfind("neither\n", 0) == 0);
  CHECK(run({"quad", "fromq", "--inline", "-inf 0; 0 -inf"}).code == ExitCode::kDomain);
  CHECK(ref::M(run({"quad", "hyper", "--a", "2"}).out) == ref::M("-inf 2; 2 -inf"));
  CHECK(run({"quad", "hyper", "--inline", "-inf 0; 0 -inf", "--v", "0 -inf", "--w", "-inf 0"}).out == "true\n");
  CHECK(run({"quad", "osum", "--diagonal", "--inline", "0", "--other", "2 1g"}).out == "0 2 1g\n");
  const auto doc = Json::parse(run({"quad", "eval", "--diagonal", "--inline", "0 2", "--vector", "1 1", "--format", "json"}).out);
  CHECK(doc["command"] == "quad eval");
}

TEST_CASE("check reports") {
  const Run r = run({"check", "frobenius", "--trials", "50", "--seed", "9", "--format", "json"});
  REQUIRE(r.code == ExitCode::kOk);
  const auto doc = Json::parse(r.out);
  CHECK(doc["command"] == "check");
  CHECK(doc["suite"] == "frobenius");
  CHECK(doc["trials"] == 50);
  CHECK(doc["seed"] == 9);
  CHECK(doc["verdict"] == "pass");

  ::setenv("SUPERTROP_SEED", "17", 1);
  CHECK(Json::parse(run({"check", "cs-gram", "--trials", "5", "--format", "json"}).out)["seed"] == 17);
  CHECK(Json::parse(run({"check", "cs-gram", "--trials", "5", "--seed", "3", "--format", "json"}).out)["seed"] == 3);
  ::setenv("SUPERTROP_SEED", "seventeen", 1);
  CHECK(run({"check", "cs-gram"}).code == ExitCode::kParse);
  ::unsetenv("SUPERTROP_SEED");
}

TEST_CASE("property: both engines print the same determinant") {
  const supertrop::oracle::SamplerConfig cfg{};
  for (std::uint64_t i = 0; i < 60; ++i) {
    supertrop::TrialRng rng(81, i);
    const auto a = supertrop::oracle::draw_matrix(rng, 1 + i % 5, 1 + i % 5, cfg);
    const std::string text = supertrop::format_matrix(a);
    const Run e = run({"det", "--inline", text});
    const Run s = run({"det", "--engine", "assign", "--inline", text});
    REQUIRE(e.code == ExitCode::kOk);
    REQUIRE(e.out == s.out);
    REQUIRE(ref::S(e.out.substr(0, e.out.size() - 1)) == supertrop::det_value(a));
  }
}
