#include <doctest.h>

#include "galerob/error.hpp"
#include "galerob/json_io.hpp"
#include "galerob/verify.hpp"

using namespace galerob;

TEST_CASE("weights") {
  CHECK(to_string(Weight{1, -2, 0, 3}) == "(1,-2,0,3)");
  CHECK(parse_weight("(1,-2,0,3)") == Weight{1, -2, 0, 3});
  CHECK(parse_weight(" 1, -2, 0, 3 ") == Weight{1, -2, 0, 3});
  CHECK_THROWS_AS(parse_weight("(1,2,3)"), Error);
  CHECK_THROWS_AS(parse_weight("(1,2,3,4,5)"), Error);
  CHECK(weight_from_json(Json("(0,0,-1,0)")) == Weight{0, 0, -1, 0});
  CHECK(weight_from_json(weight_to_json(Weight{4, 3, 2, 1})) == Weight{4, 3, 2, 1});
  CHECK_THROWS_AS(weight_from_json(Json::array({1, 2})), Error);
}

TEST_CASE("quiver round trip") {
  const Quiver q = build_quiver(make_params(2, 3, 7));
  const Quiver back = quiver_from_json(parse_json(to_text(quiver_to_json(q))));
  CHECK(back.params() == q.params());
  CHECK(back.arrows() == q.arrows());
  CHECK_THROWS_AS(quiver_from_json(Json{{"params", {{"a", 2}, {"c", 2}, {"N", 4}}}, {"arrows", Json::array()}}), Error);
}

TEST_CASE("degree set round trip") {
  for (int j = 1; j <= 6; ++j) {
    const DegreeSet s = build_Sj(make_params(1, 2, 5), j);
    const std::string text = to_text(degreeset_to_json(s));
    CHECK(degreeset_from_json(parse_json(text)) == s);
    CHECK(to_text(degreeset_to_json(degreeset_from_json(parse_json(text)))) == text);
  }
  Json bad = degreeset_to_json(build_Sj(make_params(1, 2, 4), 2));
  bad["points"].push_back(Json::array({9, 9, 0, 0}));
  CHECK_THROWS_AS(degreeset_from_json(bad), Error);
  CHECK_THROWS_AS(degreeset_from_json(Json{{"t", 1}}), Error);
}

TEST_CASE("theta output round trip") {
  const ThetaResult r = theta(build_Sj(make_params(1, 2, 4), 2));
  const Json j = theta_result_to_json(r);
  CHECK(theta_output_from_json(parse_json(to_text(j))) == r.output);
  CHECK(j.at("provenance").size() == r.provenance.size());
  CHECK(j.at("predicates").at("sturdy") == true);
}

TEST_CASE("orbit json") {
  const OrbitReport orbit = theta_orbit(simple2_fixture(), 6);
  const Json j = orbit_to_json(orbit);
  CHECK(j.at("steps").size() == 5);
  CHECK(j.at("failure").at("step") == 6);
  CHECK(j.at("failure").at("predicate") == "NotSturdy");
  CHECK(j.at("failure").at("witness") == "(1,0,0,0)");
  CHECK(orbit_to_json(theta_orbit(simple2_fixture(), 2)).at("failure").is_null());
}

TEST_CASE("reports round trip") {
  CheckReport r{"action", true, false, {}};
  r.fail("bad path");
  const CheckReport back = report_from_json(parse_json(to_text(report_to_json(r))));
  CHECK(back.check == r.check);
  CHECK(back.status() == "fail");
  CHECK(back.witnesses == r.witnesses);
  CHECK(report_from_json(report_to_json(CheckReport{"s", true, true, {}})).status() == "skip");
}

TEST_CASE("compact text layout") {
  const Json j{{"points", Json::array({Json::array({0, 0, -1, 0})})}, {"empty", Json::array()}};
  CHECK(to_text(j) == "{\n  \"points\": [\n    [0, 0, -1, 0]\n  ],\n  \"empty\": []\n}\n");
  CHECK_THROWS_AS(parse_json("{oops"), Error);
  CHECK_THROWS_AS(read_file("/nonexistent/file.json"), Error);
}

TEST_CASE("polynomial text round trip for F-polynomials") {
  for (int j = 1; j <= 7; ++j) {
    const LaurentPoly f = f_polynomial(build_Sj(make_params(1, 2, 5), j), Side::Ideals);
    CHECK(LaurentPoly::parse(f.to_string('y'), 5, 'y') == f);
  }
}
