#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "mhs/report.hpp"

using namespace mhs;

namespace {

GermSpec spec(const std::string& text, std::vector<std::string> vars = {}) {
  GermSpec s;
  s.polynomial = text;
  s.variables = std::move(vars);
  return s;
}

}  // namespace

TEST_CASE("analyze examples") {
  auto e6 = analyze(spec("x^3 + y^4"));
  CHECK(e6["mu"] == 6);
  CHECK(e6["version"] == "0.1.0");
  CHECK(e6["spectrum"][0]["level"] == "7/12");
  CHECK(e6["spectrum"][5]["level"] == "17/12");
  CHECK(e6["signature"]["sigma_formula"] == 0);
  CHECK(e6["residue"]["normalization"]["constant"] == "-(2 pi i)^2 Res_f");
  CHECK(failed_invariants(e6).empty());

  auto a1 = analyze(spec("x^2"));
  CHECK(a1["residue"]["gram"] == Json::parse(R"([["1/2"]])"));
  CHECK(a1["residue"]["normalization"]["constant"] == "(2 pi i)^1 Res_f");

  auto t = analyze(spec("x^2*y^2 + x^5 + y^5"));
  CHECK(t["mu"] == 11);
  CHECK(t["spectrum"] == "unavailable: not quasi-homogeneous");
  CHECK(t["hodge"] == "unavailable: not quasi-homogeneous");
  CHECK(t["signature"] == "unavailable: not quasi-homogeneous");
  CHECK(t["weight"]["jordan_partition"] == Json::parse("[2,1,1,1,1,1,1,1,1,1]"));
  CHECK(t["weight"]["level_forms"]["1"] == Json::parse(R"([["-1/20"]])"));
  CHECK(t["bilinear"]["definite"] == "unavailable: not quasi-homogeneous");
  CHECK(failed_invariants(t).empty());
}

TEST_CASE("reports are deterministic apart from timings") {
  for (const char* germ : {"x^3 + y^4", "x^2*y^2 + x^5 + y^5", "x^2*y + y^4 + z^2"}) {
    CAPTURE(germ);
    auto a = analyze(spec(germ)), b = analyze(spec(germ));
    CHECK(a.contains("timings_ms"));
    CHECK_FALSE(comparable(a).contains("timings_ms"));
    CHECK(comparable(a).dump() == comparable(b).dump());
  }
}

TEST_CASE("oracle section") {
  AnalyzeOptions o;
  o.oracle = true;
  auto r = analyze(spec("x^3 + y^4"), o);
  CHECK(r["oracle"]["max_deviation"].get<double>() < 1e-6);
  o.oracle_eps = -1;
  CHECK_THROWS_AS(analyze(spec("x^3"), o), Error);
}

TEST_CASE("errors carry codes") {
  auto code_of = [](const GermSpec& s) {
    try {
      analyze(s);
    } catch (const Error& e) {
      return error_json(e)["error"]["code"].get<std::string>();
    }
    return std::string("none");
  };
  CHECK(code_of(spec("x^2*y^2")) == "NotIsolatedAtOrigin");
  CHECK(code_of(spec("x^^2")) == "ParseError");
  CHECK(code_of(spec("x^2 + w", {"x", "y"})) == "UnknownVariable");
  CHECK(is_input_error(ErrorCode::ParseError));
  CHECK_FALSE(is_input_error(ErrorCode::CalibrationFailure));
  CHECK_THROWS_AS(GermSpec::from_json(Json::parse(R"({"name": "no polynomial"})")), Error);
}

TEST_CASE("check reports corrupted expectations and goldens") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "mhs_report_test";
  fs::remove_all(dir);
  fs::create_directories(dir);
  auto put = [&](const std::string& name, const Json& j) {
    std::ofstream(dir / (name + ".json")) << j.dump(2);
  };
  put("e6", {{"polynomial", "x^3 + y^4"}, {"variables", {"x", "y"}}, {"expect", {{"/mu", 6}}}});
  put("flat", {{"polynomial", "x^2*y^2"}, {"expect_error", "NotIsolatedAtOrigin"}});

  auto first = check_corpus(dir, true);
  REQUIRE(first.size() == 2);
  for (const auto& o : first) CHECK(o.pass);
  for (const auto& o : check_corpus(dir, false)) CHECK(o.pass);

  put("e6", {{"polynomial", "x^3 + y^4"}, {"variables", {"x", "y"}}, {"expect", {{"/mu", 7}}}});
  auto bad = check_corpus(dir, false);
  CHECK_FALSE(bad[0].pass);
  REQUIRE_FALSE(bad[0].problems.empty());
  CHECK(bad[0].problems[0] == "expected /mu = 7, got 6");

  put("flat", {{"polynomial", "x^2 + y^2"}, {"expect_error", "NotIsolatedAtOrigin"}});
  auto wrong = check_corpus(dir, false);
  CHECK_FALSE(wrong[1].pass);
  fs::remove_all(dir);
}

TEST_CASE("text rendering") {
  Json j = Json::parse(R"({"mu": 2, "gram": [["0", "1/3"], ["1/3", "0"]], "basis": ["1", "x"]})");
  CHECK(render_text(j) == "basis: 1, x\ngram:\n  0  1/3\n  1/3  0\nmu: 2\n");
}
