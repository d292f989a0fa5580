#include <filesystem>
#include <fstream>

#include <doctest.h>

#include "reference.hpp"
#include "supertrop/error.hpp"
#include "supertrop/io.hpp"
#include "supertrop/oracle.hpp"

using namespace supertrop;
using ref::M;
using ref::S;

TEST_CASE("matrix text") {
  const Matrix a = parse_matrix("0 1\n2 0g\n");
  CHECK(a(1, 1) == S("0g"));
  CHECK(parse_matrix("0 1; 2 0g") == a);
  CHECK(parse_matrix("# comment\n\n  0   1  \n2\t0g\n") == a);
  CHECK(format_matrix(a) == "0 1\n2 0g");
  CHECK(format_matrix(M("-1/2 -inf")) == "-1/2 -inf");
}

TEST_CASE("matrix JSON") {
  CHECK(parse_matrix(R"({"rows": [["0", "1"], ["2", "0g"]]})") == M("0 1; 2 0g"));
  CHECK(parse_matrix("  \n{\"rows\": [[\"-inf\"]]}") == M("-inf"));
  for (const char* bad : {R"({"rows": [[0, 1]]})", R"({"cols": []})", R"({"rows": []})", R"({"rows": [["0"], ["1", "2"]]})",
                          "{not json", R"({"rows": [["x"]]})"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_matrix(bad), ParseError);
  }
}

TEST_CASE("malformed text") {
  CHECK_THROWS_WITH_AS(parse_matrix("1 2\n3"), doctest::Contains("ragged"), ParseError);
  CHECK_THROWS_AS(parse_matrix(""), ParseError);
  CHECK_THROWS_AS(parse_matrix("# only a comment\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("1 two"), ParseError);
}

TEST_CASE("vectors") {
  CHECK(parse_vector("1 2 3") == ref::V("1 2 3"));
  CHECK(parse_vector("1; 2; 3") == ref::V("1 2 3"));
  CHECK(format_vector(ref::V("1g -inf")) == "1g -inf");
  CHECK_THROWS_AS(parse_vector("1 2; 3 4"), ParseError);
}

TEST_CASE("files") {
  const auto path = std::filesystem::temp_directory_path() / "supertrop_io_test.txt";
  {
    std::ofstream out(path);
    out << "0 1\n2 0\n";
  }
  CHECK(read_matrix_file(path) == M("0 1; 2 0"));
  std::filesystem::remove(path);
  CHECK_THROWS_AS(read_text_file(path), ParseError);
}

TEST_CASE("property: printed matrices parse back") {
  const oracle::SamplerConfig cfg{};
  for (std::uint64_t i = 0; i < 300; ++i) {
    TrialRng rng(71, i);
    const Matrix a = oracle::draw_matrix(rng, 1 + i % 4, 1 + i % 3, cfg);
    REQUIRE(parse_matrix(format_matrix(a)) == a);
  }
}
