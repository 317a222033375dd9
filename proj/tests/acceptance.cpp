// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>

#include "galerob/error.hpp"
#include "galerob/laurent.hpp"
#include "galerob/quiver.hpp"
#include "galerob/repcheck.hpp"
#include "galerob/theta.hpp"
#include "galerob/verify.hpp"
#include "oracles.hpp"

using namespace galerob;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string note;
  void require(bool cond, const std::string& why) {
    if (!cond && ok) {
      ok = false;
      note = why;
    }
  }
};

int failures = 0;

void criterion(int n, const char* title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = Clock::now();
  try {
    body(o);
  } catch (const Error& e) {
    o.ok = false;
    o.note = e.what();
  }
  const double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  if (!o.ok) ++failures;
  std::printf("%s %2d %s (%.1f ms)%s%s\n", o.ok ? "PASS" : "FAIL", n, title, ms, o.note.empty() ? "" : ": ",
              o.note.c_str());
}

const GRParams kSomos4 = make_params(1, 2, 4);
const GRParams kSomos5 = make_params(1, 2, 5);

std::vector<OrbitReport> orbits;  // criteria 4 and 5 feed criterion 6

}  // namespace

int main() {
  criterion(1, "quiver fixture (1,2,6)", [](Outcome& o) {
    const auto t0 = Clock::now();
    const Quiver q = build_quiver(make_params(1, 2, 6));
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    std::multiset<std::pair<int, int>> got;
    for (const auto& a : q.arrows()) got.insert({a.source, a.target});
    // doubled 2->3, 3->4, 4->5 plus the single arrows
    const std::multiset<std::pair<int, int>> want{
        {1, 2}, {2, 3}, {2, 3}, {3, 4}, {3, 4}, {4, 5}, {4, 5}, {5, 6}, {1, 6}, {3, 1},
        {4, 2}, {5, 3}, {6, 4}, {5, 1}, {6, 2}, {2, 5}};
    o.require(got == want, "arrow multiset differs from the expected one");
    o.require(q.arrows().size() == 16, std::to_string(q.arrows().size()) + " arrows");
    o.require(ms < 1.0, "build took " + std::to_string(ms) + " ms");
  });

  criterion(2, "Somos-4 F-polynomials", [](Outcome& o) {
    const char* want[] = {"1 + y1", "1 + y2 + y1*y2", "1 + 2*y1 + y1^2 + y1^2*y3 + y1^2*y2*y3 + y1^3*y2*y3"};
    for (int j = 1; j <= 3; ++j) {
      const LaurentPoly f = f_polynomial(build_Sj(kSomos4, j), Side::Ideals);
      o.require(f == LaurentPoly::parse(want[j - 1], 4, 'y'), "F_" + std::to_string(4 + j) + " = " + f.to_string('y'));
    }
  });

  criterion(3, "sequence identity |J(S^(j))| = x_{N+j}", [](Outcome& o) {
    const auto t0 = Clock::now();
    for (const auto& p : {kSomos4, kSomos5}) {
      const auto x = oracle::recurrence(p.a, p.c, p.N, 1, p.N + 10);
      for (int j = 1; j <= 10; ++j) {
        const mpz_class n = count_order_ideals(build_Sj(p, j));
        o.require(mpq_class(n) == x.at(p.N + j), "N=" + std::to_string(p.N) + " j=" + std::to_string(j) + ": " +
                                                     n.get_str() + " vs " + x.at(p.N + j).get_str());
      }
    }
    const double s = std::chrono::duration<double>(Clock::now() - t0).count();
    o.require(s < 60.0, "took " + std::to_string(s) + " s");
  });

  criterion(4, "theta orbit of S^(1) and inverse round trip", [](Outcome& o) {
    for (const auto& p : {kSomos4, kSomos5}) {
      const OrbitReport orbit = theta_orbit(build_Sj(p, 1), 7);
      orbits.push_back(orbit);
      o.require(!orbit.failure, "orbit stopped" + (orbit.failure ? ": " + orbit.failure->message : ""));
      for (std::size_t i = 0; i < orbit.steps.size(); ++i) {
        const int j = static_cast<int>(i) + 2;
        o.require(orbit.steps[i].output == build_Sj(p, j), "theta^" + std::to_string(j - 1) + " != S^(" +
                                                               std::to_string(j) + ")");
        const DegreeSet& before = i == 0 ? orbit.start : orbit.steps[i - 1].output;
        o.require(theta_inverse(orbit.steps[i].output).output == before, "inverse fails at step " + std::to_string(i + 1));
      }
    }
  });

  criterion(5, "simple at vertex 2 end to end", [](Outcome& o) {
    const OrbitReport orbit = theta_orbit(simple2_fixture(), 6);
    orbits.push_back(orbit);
    const DegreeSet expected{kSomos4, -1,
                             {Weight{0, 0, 0, 0}, Weight{0, 0, -1, 0}, Weight{0, 0, 0, -1}, Weight{1, 0, -1, 0},
                              Weight{1, 0, 0, -1}, Weight{0, 1, 0, 0}}};
    o.require(orbit.steps.size() >= 4 && orbit.steps[3].output == expected, "theta^4 differs");
    o.require(orbit.steps.size() == 5, "theta^5 did not succeed");
    o.require(orbit.failure && orbit.failure->step == 6 && orbit.failure->predicate == ErrorCode::NotSturdy &&
                  orbit.failure->witness == "(1,0,0,0)",
              "step 6 did not fail NotSturdy at (1,0,0,0)");
    const char* want[] = {"4,1", "4,3,4", "4,3,2,3", "4,3,2,1,2", "4,3,2,1,4,1", "4,3,2,1,4,3,4"};
    std::vector<int> seq{2};
    for (const char* w : want) {
      seq = track_mutation_sequence(seq, 4, Direction::Theta);
      o.require(format_sequence(seq) == w, "sequence " + format_sequence(seq) + ", expected " + w);
    }
  });

  criterion(6, "table decisions equal premutation ranks", [](Outcome& o) {
    o.require(orbits.size() == 3, "orbits from criteria 4-5 missing");
    std::size_t candidates = 0;
    for (const auto& orbit : orbits) {
      const CheckReport r = check_oracle_equivalence(orbit);
      o.require(r.passed, r.witnesses.empty() ? r.check : r.witnesses.front());
      for (const auto& s : orbit.steps) candidates += s.candidates.size();
    }
    o.require(candidates > 0, "no candidates examined");
  });

  criterion(7, "subrepresentations are order filters", [](Outcome& o) {
    std::vector<DegreeSet> sets;
    for (const auto& p : {kSomos4, kSomos5}) {
      for (int j = 1; j <= 8; ++j) {
        sets.push_back(build_Sj(p, j));
        sets.push_back(negate(build_Sj(p, j)));
      }
    }
    for (const auto& orbit : orbits) {
      sets.push_back(orbit.start);
      for (const auto& s : orbit.steps) sets.push_back(s.output);
    }
    const CheckReport r = check_subreps(sets, 15);
    o.require(r.passed && !r.skipped, r.witnesses.empty() ? r.status() : r.witnesses.front());
  });

  criterion(8, "g-vectors for Somos-4", [](Outcome& o) {
    const CheckReport r = check_g_vectors(kSomos4, 6);
    o.require(r.passed, r.witnesses.empty() ? r.check : r.witnesses.front());
  });

  criterion(9, "Laurent phenomenon sweep", [](Outcome& o) {
    for (auto [a, c, N] : {std::tuple{1, 2, 4}, std::tuple{1, 2, 5}, std::tuple{1, 2, 6}, std::tuple{1, 3, 7},
                           std::tuple{2, 3, 7}}) {
      const CheckReport r = check_laurent(make_params(a, c, N), 1 - (N + 6), N + 10);
      o.require(r.passed, r.witnesses.empty() ? r.check : r.witnesses.front());
    }
  });

  criterion(10, "geometry for all N <= 12", [](Outcome& o) {
    int count = 0;
    for (int N = 2; N <= 12; ++N)
      for (int a = 1; a < N; ++a)
        for (int c = 1; c < N; ++c) {
          if (std::gcd(std::gcd(a, c), N) != 1) continue;
          ++count;
          const CheckReport r = check_geometry(make_params(a, c, N));
          o.require(r.passed, r.check + ": " + (r.witnesses.empty() ? "" : r.witnesses.front()));
        }
    o.require(count > 0, "empty sweep");
  });

  criterion(11, "cyclic construction gives -S^(3)", [](Outcome& o) {
    const DegreeSet s = build_cyclic(kSomos4, 1, {1, 2, 3}, Weight{-2, 0, 0, 0});
    o.require(s == negate(build_Sj(kSomos4, 3)), describe(s));
  });

  return failures == 0 ? 0 : 1;
}
