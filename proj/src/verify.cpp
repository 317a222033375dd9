#include "galerob/verify.hpp"

#include <algorithm>

#include "galerob/error.hpp"
#include "galerob/laurent.hpp"
#include "galerob/quiver.hpp"

namespace galerob {

namespace {

std::string params_string(const GRParams& p) {
  return "(" + std::to_string(p.a) + "," + std::to_string(p.c) + "," + std::to_string(p.N) + ")";
}

// Runs f, turning a thrown library error into a failed check.
template <typename F>
CheckReport guarded_check(std::string name, F&& f) {
  CheckReport r{std::move(name), true, false, {}};
  try {
    f(r);
  } catch (const Error& e) {
    r.fail(std::string(e.what()) + (e.witness().empty() ? "" : " [" + e.witness() + "]"));
  }
  return r;
}

bool theta_applicable(const GRParams& p) { return p.a != p.c && p.a != p.d(); }

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckReport& c) { return c.passed; });
}

Json VerifyReport::to_json() const {
  Json arr = Json::array();
  for (const auto& c : checks) arr.push_back(report_to_json(c));
  return Json{{"params", params_to_json(params)}, {"status", passed() ? "pass" : "fail"}, {"checks", arr}};
}

CheckReport check_geometry(const GRParams& p) {
  return guarded_check("geometry " + params_string(p), [&](CheckReport& r) {
    const Quiver q = build_quiver(p);
    const auto faces = enumerate_faces(q);
    int ccw = 0;
    for (const auto& f : faces) {
      if (f.weight() != kFaceWeight) r.fail("face weight " + to_string(f.weight()));
      if (f.orientation == Orientation::Counterclockwise) ++ccw;
    }
    const int V = p.N;
    const int E = static_cast<int>(q.arrows().size());
    const int F = static_cast<int>(faces.size());
    if (V - E + F != 0) r.fail("V-E+F = " + std::to_string(V - E + F));
    if (2 * ccw != F) r.fail("counterclockwise " + std::to_string(ccw) + " of " + std::to_string(F) + " faces");

    std::vector<int> outs, ins;
    for (const auto& a : q.arrows()) {
      if (a.source == 1) outs.push_back(a.target);
      if (a.target == 1) ins.push_back(a.source);
    }
    std::sort(outs.begin(), outs.end());
    std::sort(ins.begin(), ins.end());
    std::vector<int> want_out{1 + p.a, 1 + p.b()}, want_in{1 + p.c, 1 + p.d()};
    std::sort(want_out.begin(), want_out.end());
    std::sort(want_in.begin(), want_in.end());
    if (outs != want_out || ins != want_in) r.fail("vertex 1 does not have the degree-4 pattern");

    const Multigraph m = q.multigraph();
    if (m.two_acyclic()) {
      if (!(classical_mutation(m, 1).relabel(-1) == m)) r.fail("mutation at 1 followed by relabelling changes Q");
    }
    if (!dimer_alternation_holds(q)) r.fail("arrows around some vertex do not alternate");
  });
}

CheckReport check_laurent(const GRParams& p, int lo, int hi) {
  return guarded_check("laurent " + params_string(p), [&](CheckReport& r) {
    const auto x = gr_sequence(p, lo, hi);
    const auto v = gr_specialized(p, lo, hi, 1);
    const std::vector<mpq_class> ones(static_cast<std::size_t>(p.N), 1);
    for (const auto& [i, poly] : x) {
      if (poly.evaluate(ones) != v.at(i)) r.fail("x_" + std::to_string(i) + " disagrees with the integer recurrence");
    }
  });
}

CheckReport check_oracle_equivalence(const OrbitReport& orbit) {
  return guarded_check("oracle-equivalence " + params_string(orbit.start.params), [&](CheckReport& r) {
    for (std::size_t i = 0; i < orbit.steps.size(); ++i) {
      const DegreeSet& input = i == 0 ? orbit.start : orbit.steps[i - 1].output;
      for (const auto& c : orbit.steps[i].candidates) {
        const PremutationDims d = premutation_dims(input, c.point);
        const int admitted = c.column ? 1 : 0;
        const Dims ranks_dims{d.dimA, d.dimB, d.dimC, d.dimD};
        if (ranks_dims != c.dims || d.total() != admitted) {
          r.fail("step " + std::to_string(i + 1) + " " + to_string(c.point) + ": table column " +
                 std::to_string(c.column) + ", rank dimension " + std::to_string(d.total()));
        }
        if (!d.rank_claims_hold()) r.fail("rank claim fails at " + to_string(c.point));
        if (!d.is_complex()) r.fail("maps do not compose to zero at " + to_string(c.point));
      }
    }
  });
}

CheckReport check_subreps(const std::vector<DegreeSet>& sets, std::size_t cap) {
  std::string name = "subrep-oracle";
  if (!sets.empty()) name += " " + params_string(sets.front().params);
  return guarded_check(name, [&](CheckReport& r) {
    std::size_t tested = 0;
    for (const auto& s : sets) {
      if (s.size() > cap) continue;
      ++tested;
      std::set<std::set<Weight>> brute, filters;
      for (auto& sub : subrep_bruteforce(s, cap)) brute.insert(std::move(sub.points));
      for (auto& f : order_filters(s)) filters.insert(std::move(f));
      if (brute != filters) r.fail("subrepresentations differ from order filters for " + describe(s));
      if (!(f_polynomial_oracle(s, cap) == f_polynomial(s, Side::Filters))) {
        r.fail("F-polynomials differ for " + describe(s));
      }
    }
    if (tested == 0) r.skipped = true;
  });
}

CheckReport check_g_vectors(const GRParams& p, int jmax) {
  return guarded_check("g-vectors " + params_string(p), [&](CheckReport& r) {
    const Quiver q = build_quiver(p);
    const auto x = gr_sequence(p, 1, p.N + jmax);
    for (int j = 1; j <= jmax; ++j) {
      const LaurentPoly f = f_polynomial(build_Sj(p, j), Side::Ideals);
      try {
        recover_g_vector(x.at(p.N + j), f, q);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NotMonomial) throw;
        r.fail("x_" + std::to_string(p.N + j) + ": " + e.what());
      }
    }
  });
}

DegreeSet simple2_fixture() { return DegreeSet{make_params(1, 2, 4), -5, {Weight{0, -1, 0, 0}}}; }

VerifyReport run_verification(const VerifyConfig& cfg) {
  const GRParams& p = cfg.params;
  const int N = p.N;
  if (cfg.jmax < 1) throw Error(ErrorCode::InvalidParams, "jmax must be at least 1", std::to_string(cfg.jmax));
  VerifyReport rep{p, {}};
  rep.checks.push_back(check_geometry(p));
  rep.checks.push_back(check_laurent(p, 1 - cfg.jmax, N + cfg.jmax));

  std::vector<DegreeSet> sj;
  rep.checks.push_back(guarded_check("sequence-identity", [&](CheckReport& r) {
    const auto v = gr_specialized(p, 1, N + cfg.jmax, 1);
    for (int j = 1; j <= cfg.jmax; ++j) {
      sj.push_back(build_Sj(p, j));
      const mpz_class ideals = count_order_ideals(sj.back());
      if (mpq_class(ideals) != v.at(N + j)) {
        r.fail("j=" + std::to_string(j) + ": " + ideals.get_str() + " ideals, x_" + std::to_string(N + j) + " = " +
               v.at(N + j).get_str());
      }
    }
  }));
  rep.checks.push_back(guarded_check("sj-predicates", [&](CheckReport& r) {
    for (const auto& s : sj) {
      if (auto w = interval_violation(s)) r.fail("not interval-closed: " + to_string(w->y));
      if (!is_connected(s)) r.fail("not connected: " + describe(s));
      if (auto w = sturdy_violation(s)) r.fail("not sturdy: " + to_string(*w));
    }
  }));
  rep.checks.push_back(guarded_check("filter-ideal-duality", [&](CheckReport& r) {
    // complement of a filter is an ideal; ideal-side subscripts are reflected
    for (const auto& s : sj) {
      const LaurentPoly fil = f_polynomial(s, Side::Filters, cfg.threads);
      const LaurentPoly ide = f_polynomial(s, Side::Ideals, cfg.threads);
      LaurentPoly::Exponents total(static_cast<std::size_t>(N), 0);
      for (const auto& w : s.points) ++total[static_cast<std::size_t>(N - s.vertex_of(w))];
      std::vector<LaurentPoly> reflect;
      for (int i = 1; i <= N; ++i) reflect.push_back(LaurentPoly::variable(N, N + 1 - i).pow(-1));
      if (!(LaurentPoly::monomial(total) * fil.substitute(reflect) == ide)) r.fail("duality fails for " + describe(s));
    }
  }));

  if (!theta_applicable(p)) {
    for (const char* name : {"theta-orbit", "oracle-equivalence", "theta-inverse"}) {
      rep.checks.push_back(CheckReport{name, true, true, {"vertex 1 lies on a 2-cycle; theta is not defined"}});
    }
  } else {
    const OrbitReport orbit = theta_orbit(sj.front(), cfg.jmax - 1, cfg.theta);
    rep.checks.push_back(guarded_check("theta-orbit", [&](CheckReport& r) {
      if (orbit.failure) r.fail("step " + std::to_string(orbit.failure->step) + ": " + orbit.failure->message);
      for (std::size_t i = 0; i < orbit.steps.size(); ++i) {
        if (!(orbit.steps[i].output == sj[i + 1])) {
          r.fail("theta^" + std::to_string(i + 1) + "(S^(1)) != S^(" + std::to_string(i + 2) + ")");
        }
      }
    }));
    rep.checks.push_back(check_oracle_equivalence(orbit));
    rep.checks.push_back(guarded_check("theta-inverse", [&](CheckReport& r) {
      for (std::size_t i = 0; i < orbit.steps.size(); ++i) {
        const DegreeSet& before = i == 0 ? orbit.start : orbit.steps[i - 1].output;
        const DegreeSet back = theta_inverse(orbit.steps[i].output, cfg.theta).output;
        if (!(back == before)) r.fail("theta_inverse does not undo step " + std::to_string(i + 1));
        if (!(theta_inverse_opposite(orbit.steps[i].output, cfg.theta).output == back)) {
          r.fail("opposite-quiver route disagrees at step " + std::to_string(i + 1));
        }
      }
    }));
  }

  if (p == make_params(1, 2, 4) && theta_applicable(p)) {
    rep.checks.push_back(guarded_check("example-simple2", [&](CheckReport& r) {
      const OrbitReport orbit = theta_orbit(simple2_fixture(), 6, cfg.theta);
      const DegreeSet expected{p, -1,
                               {Weight{0, 0, 0, 0}, Weight{0, 0, -1, 0}, Weight{0, 0, 0, -1}, Weight{1, 0, -1, 0},
                                Weight{1, 0, 0, -1}, Weight{0, 1, 0, 0}}};
      if (orbit.steps.size() < 4 || !(orbit.steps[3].output == expected)) r.fail("theta^4 differs from the fixture");
      if (orbit.steps.size() != 5) r.fail("expected exactly five successful steps");
      if (!orbit.failure || orbit.failure->step != 6 || orbit.failure->predicate != ErrorCode::NotSturdy ||
          orbit.failure->witness != to_string(Weight{1, 0, 0, 0})) {
        r.fail("step 6 should fail NotSturdy at (1,0,0,0)");
      }
    }));
  }

  std::vector<DegreeSet> small = sj;
  for (const auto& s : sj) small.push_back(negate(s));
  rep.checks.push_back(check_subreps(small, cfg.brute_cap));
  rep.checks.push_back(check_g_vectors(p, std::min(cfg.gvector_jmax, cfg.jmax)));

  rep.checks.push_back(guarded_check("action", [&](CheckReport& r) {
    const Quiver q = build_quiver(p);
    for (const auto& s : sj) {
      if (s.size() > cfg.action_cap) continue;
      for (const auto& c : verify_action(q, s)) {
        for (const auto& w : c.witnesses) r.fail(c.check + ": " + w);
        if (!c.passed && c.witnesses.empty()) r.fail(c.check);
      }
    }
  }));
  return rep;
}

}  // namespace galerob
