#include <filesystem>
#include <fstream>
#include <sstream>

#include "ipdhyp/cli.hpp"
#include "ipdhyp/json_io.hpp"
#include "support.hpp"

using namespace ipd;
using ipdtest::C;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run dispatch(const std::vector<std::string>& args) {
  const int saved = Precision::digits();
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli_dispatch(args, out, err);
  Precision::set_digits(saved);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("verify subcommand") {
  const Run r = dispatch({"verify", "--only", "LEMMA3", "--count", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("LEMMA3 pass") != std::string::npos);

  CHECK(dispatch({"verify", "--only", "MP1", "--count", "2", "--tol", "0"}).code == 1);
  CHECK(dispatch({"verify", "--only", "NOPE"}).code == 2);
  CHECK(dispatch({"verify", "--count", "-1"}).code == 2);
  CHECK(dispatch({"verify", "--only", ""}).code == 0);

  const auto report = (std::filesystem::temp_directory_path() / "ipdhyp_report.json").string();
  const Run wide = dispatch({"verify", "--only", "COR4", "--count", "2", "--digits", "50", "--json", report});
  CHECK(wide.code == 0);
  std::ifstream in(report);
  const Json j = Json::parse(in);
  CHECK(j["digits"] == 50);
  CHECK(j["identities"][0]["id"] == "COR4");
  CHECK(j["identities"][0]["cases_total"] == 2);
}

TEST_CASE("usage errors") {
  CHECK(dispatch({}).code == 2);
  CHECK(dispatch({"frobnicate"}).code == 2);
  CHECK(dispatch({"charpoly", "--which", "Z", "--params", "x.json"}).code == 2);
  const auto bad = write_temp("ipdhyp_cli_bad.json", "{\"b\": ");
  const Run r = dispatch({"transform", "--theorem", "MP1", "--params", bad});
  CHECK(r.code == 2);
  CHECK_FALSE(r.err.empty());
  CHECK(dispatch({"transform", "--theorem", "MP1", "--params", "/nonexistent/p.json"}).code == 2);
}

TEST_CASE("charpoly subcommand") {
  const auto params = write_temp("ipdhyp_cli_q.json", R"({"b": "0.4", "c": "2.3", "f": ["1.5"], "m": [1]})");
  const Run r = dispatch({"charpoly", "--which", "Q", "--params", params});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  REQUIRE(j["roots"]["roots"].size() == 1);
  const Complex root = complex_from_json(j["roots"]["roots"][0]);
  CHECK_CLOSE(root, C("1.5") * (C("2.3") - C("0.4") - 1) / (C("1.5") - C("0.4")), 2);
}

TEST_CASE("transform and eval subcommands") {
  const auto params = write_temp("ipdhyp_cli_mp1.json", R"({"a": "0.7", "b": "0.4", "c": "2.3", "f": ["1.5"], "m": [2]})");
  const Run t = dispatch({"transform", "--theorem", "MP1", "--params", params, "--x", "0.3,0"});
  REQUIRE(t.code == 0);
  const Json jt = Json::parse(t.out);
  CHECK(parse_real(jt["residual"].get<std::string>()) < pow10(-25));
  CHECK(jt["transformation"]["terms"].size() == 1);

  const Run e = dispatch({"eval", "--num", "0.3,0.7", "--den", "1.9", "--x", "0.4+0.2i"});
  REQUIRE(e.code == 0);
  const Complex value = complex_from_json(Json::parse(e.out)["value"]);
  CHECK_CLOSE(value, C("1.0492722194789599452167037622549590967881270266298+"
                       "0.031481142280962279969583364679994923336155103026904i"), 2);
  CHECK(dispatch({"eval", "--num", "1,1", "--den", "2", "--x", "-1"}).code == 1);
}
