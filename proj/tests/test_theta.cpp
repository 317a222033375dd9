#include <doctest.h>

#include "galerob/error.hpp"
#include "galerob/repcheck.hpp"
#include "galerob/theta.hpp"
#include "galerob/verify.hpp"

using namespace galerob;

namespace {

const GRParams kSomos4 = make_params(1, 2, 4);

ErrorCode code_of(const DegreeSet& s, const ThetaOptions& opts = {}) {
  try {
    theta(s, opts);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InternalError;
}

}  // namespace

TEST_CASE("orbit of S^(1) runs through S^(j)") {
  for (const auto& p : {kSomos4, make_params(1, 2, 5), make_params(1, 3, 7), make_params(2, 3, 7)}) {
    const OrbitReport orbit = theta_orbit(build_Sj(p, 1), 7);
    REQUIRE_FALSE(orbit.failure);
    REQUIRE(orbit.steps.size() == 7);
    for (int j = 2; j <= 8; ++j) {
      const auto& out = orbit.steps[static_cast<std::size_t>(j - 2)].output;
      CHECK(out == build_Sj(p, j));
      CHECK(theta_inverse(out).output == (j == 2 ? orbit.start : orbit.steps[static_cast<std::size_t>(j - 3)].output));
      CHECK(theta_inverse_opposite(out).output == theta_inverse(out).output);
    }
    const OrbitReport back = theta_orbit(orbit.last(), -7);
    REQUIRE_FALSE(back.failure);
    CHECK(back.inverse);
    CHECK(back.last() == build_Sj(p, 1));
  }
}

TEST_CASE("provenance names table columns of admitted points") {
  const ThetaResult r = theta(build_Sj(kSomos4, 3));
  CHECK(r.output == build_Sj(kSomos4, 4));
  for (const auto& pr : r.provenance) {
    CHECK(pr.column >= 1);
    CHECK(pr.column <= 8);
    CHECK(r.output.vertex_of(pr.point) == 4);
  }
  for (const auto& c : r.candidates) {
    const bool admitted = r.output.contains(c.point);
    CHECK(admitted == (c.column != 0));
    CHECK(theta_dims(build_Sj(kSomos4, 3), c.point) == c.dims);
  }
  CHECK(r.output_flags.sturdy);
}

TEST_CASE("simple at vertex 2") {
  const OrbitReport orbit = theta_orbit(simple2_fixture(), 6);
  REQUIRE(orbit.steps.size() == 5);
  const DegreeSet expected{kSomos4, -1,
                           {Weight{0, 0, 0, 0}, Weight{0, 0, -1, 0}, Weight{0, 0, 0, -1}, Weight{1, 0, -1, 0},
                            Weight{1, 0, 0, -1}, Weight{0, 1, 0, 0}}};
  CHECK(orbit.steps[3].output == expected);
  REQUIRE(orbit.failure);
  CHECK(orbit.failure->step == 6);
  CHECK(orbit.failure->predicate == ErrorCode::NotSturdy);
  CHECK(orbit.failure->witness == "(1,0,0,0)");
  CHECK(code_of(orbit.last()) == ErrorCode::NotSturdy);
  CHECK(simple2_fixture() == build_cyclic(kSomos4, 2, {2}, Weight{0, -1, 0, 0}));
}

TEST_CASE("preconditions") {
  CHECK(code_of(DegreeSet{make_params(1, 1, 2), -2, {}}) == ErrorCode::TwoCycleAtVertexOne);
  CHECK(code_of(DegreeSet{make_params(1, 3, 4), -2, {}}) == ErrorCode::TwoCycleAtVertexOne);
  CHECK(code_of(DegreeSet{kSomos4, 0, {Weight{9, 0, 0, 0}}}) == ErrorCode::InvalidDegreeSet);

  DegreeSet holey = build_Sj(kSomos4, 3);
  holey.points.erase(Weight{1, 0, 0, 0});
  CHECK(code_of(holey) == ErrorCode::NotIntervalClosed);

  const DegreeSet apart{kSomos4, -2, {Weight{0, 0, -1, 0}, Weight{0, 0, 0, -1}}};
  CHECK(code_of(apart) == ErrorCode::NotConnected);
  ThetaOptions lenient;
  lenient.allow_disconnected = true;
  CHECK(code_of(apart, lenient) != ErrorCode::NotConnected);

  // a single point over vertex 1
  const DegreeSet lone{kSomos4, -1, {Weight{0, 0, 0, 0}}};
  CHECK(lone.vertex_of(Weight{}) == 1);
  CHECK(code_of(lone) == ErrorCode::ThetaUndefined);
}

TEST_CASE("inverse witnesses use the caller's coordinates") {
  const OrbitReport orbit = theta_orbit(negate(simple2_fixture()), -6);
  REQUIRE(orbit.failure);
  CHECK(orbit.failure->step == 6);
  CHECK(orbit.failure->predicate == ErrorCode::NotSturdy);
  CHECK(orbit.failure->witness == "(-1,0,0,0)");
}

TEST_CASE("steps 0 is the identity") {
  const OrbitReport r = theta_orbit(build_Sj(kSomos4, 2), 0);
  CHECK(r.steps.empty());
  CHECK(r.last() == build_Sj(kSomos4, 2));
}

TEST_CASE("corrupt table is caught by the rank oracle") {
  ThetaOptions bad;
  bad.table[2] = Dims{9, 9, 9, 9};
  const OrbitReport good = theta_orbit(build_Sj(kSomos4, 1), 5);
  CHECK(check_oracle_equivalence(good).passed);
  const OrbitReport broken = theta_orbit(build_Sj(kSomos4, 1), 5, bad);
  CHECK_FALSE(check_oracle_equivalence(broken).passed);
}

TEST_CASE("mutation sequence tracking") {
  std::vector<int> seq;
  std::vector<std::string> seen;
  for (int k = 0; k < 6; ++k) {
    seq = track_mutation_sequence(seq, 4, Direction::Theta);
    seen.push_back(format_sequence(seq));
  }
  CHECK(seen[0] == "4");
  CHECK(seen[1] == "4,3");
  CHECK(parse_sequence("4,1") == std::vector<int>{4, 1});
  CHECK(track_mutation_sequence({4, 1}, 4, Direction::Theta) == std::vector<int>{4, 3, 4});
  CHECK(track_mutation_sequence({4, 3, 4}, 4, Direction::Theta) == std::vector<int>{4, 3, 2, 3});
  CHECK(track_mutation_sequence({4, 3, 2, 3}, 4, Direction::Theta) == std::vector<int>{4, 3, 2, 1, 2});
  CHECK(track_mutation_sequence({4, 3, 2, 1, 2}, 4, Direction::Theta) == std::vector<int>{4, 3, 2, 1, 4, 1});
  CHECK(track_mutation_sequence({4, 3, 2, 1, 4, 1}, 4, Direction::Theta) == std::vector<int>{4, 3, 2, 1, 4, 3, 4});
  CHECK(track_mutation_sequence({4, 3, 4}, 4, Direction::ThetaInverse) == std::vector<int>{1, 1, 4, 1});
  CHECK_THROWS_AS(parse_sequence("4,x"), Error);
}
