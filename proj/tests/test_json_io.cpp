#include <filesystem>
#include <fstream>

#include "ipdhyp/json_io.hpp"
#include "support.hpp"

using namespace ipd;
using ipdtest::C;

namespace {

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("complex values from JSON") {
  CHECK(complex_from_json(Json("0.25-1.5i")) == C("0.25-1.5i"));
  CHECK(complex_from_json(Json::parse(R"(["0.1", "-2"])")) == C("0.1-2i"));
  CHECK(complex_from_json(Json::parse("[0.5, 1]")) == C("0.5+i"));
  CHECK(complex_from_json(Json(3)) == C("3"));
  CHECK_THROWS_AS(complex_from_json(Json::parse("[1, 2, 3]")), Error);
  CHECK_THROWS_AS(complex_from_json(Json("abc")), Error);
  CHECK_THROWS_AS(complex_from_json(Json::object()), Error);
}

TEST_CASE("complex values round-trip at full precision") {
  const Complex z = C("0.1234567890123456789012345678901234567891-3.3i") / C("7");
  CHECK_CLOSE(complex_from_json(complex_to_json(z)), z, 1);
  CHECK(complex_to_json(C("2")).size() == 2);
}

TEST_CASE("parameter files") {
  const Json j = Json::parse(R"({"a": "0.7", "b": [0.4, 0], "c": "2.3", "f": ["1.5"], "m": [2]})");
  const ParamsFile pf = params_file_from_json(j);
  const IpdSpec s = pf.spec();
  CHECK(*s.a == C("0.7"));
  CHECK(s.b == C("0.4"));
  CHECK(s.m.total() == 2);
  const ParamsFile again = params_file_from_json(to_json(pf));
  CHECK(again.spec().c == s.c);
  CHECK(again.f[0] == s.f[0]);

  const ParamsFile degenerate = params_file_from_json(Json::parse(R"({"b": "0.4", "p": 2, "f": ["1.5"], "m": [1]})"));
  CHECK(degenerate.spec().c == C("2.4"));

  const ParamsFile vec = params_file_from_json(Json::parse(R"({"a": "0.3", "b": ["0.4", "1.2"], "p": [1, 2], "f": [], "m": []})"));
  REQUIRE(vec.b_vector);
  CHECK(vec.b_vector->size() == 2);
  CHECK(vec.p_vector->total() == 3);

  CHECK_THROWS_AS(params_file_from_json(Json::parse(R"({"q": 1})")), Error);
  CHECK_THROWS_AS(params_file_from_json(Json::parse(R"({"f": ["1"], "m": [1, 2]})")), Error);
  CHECK_THROWS_AS(params_file_from_json(Json::parse(R"({"b": ["1"], "p": [1, 2]})")), Error);
  CHECK_THROWS_AS(params_file_from_json(Json::parse("[]")), Error);
  CHECK_THROWS_AS(pf.scalar("d"), Error);
}

TEST_CASE("parameter files from disk") {
  const auto good = write_temp("ipdhyp_good.json", R"({"b": "0.4", "c": "2.3", "f": ["1.5"], "m": [1]})");
  CHECK(load_params_file(good).scalar("c") == C("2.3"));
  const auto bad = write_temp("ipdhyp_bad.json", R"({"b": "0.4", )");
  try {
    load_params_file(bad);
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
  }
  CHECK_THROWS_AS(load_params_file("/nonexistent/ipdhyp.json"), Error);
}

TEST_CASE("structured output") {
  const CPoly p(std::vector<Complex>{C("1"), C("-2")});
  const Json jp = to_json(p);
  CHECK(jp["degree"] == 1);
  CHECK(jp["coefficients"].size() == 2);
  const Json jf = to_json(HypFunction{{C("1"), C("2")}, {C("3")}});
  CHECK(jf["num"].size() == 2);
  CHECK(jf["den"].size() == 1);
}
