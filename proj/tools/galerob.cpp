// galerob: command-line front end for the Gale-Robinson toolkit.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage or input error.

#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "galerob/degreeset.hpp"
#include "galerob/error.hpp"
#include "galerob/json_io.hpp"
#include "galerob/laurent.hpp"
#include "galerob/quiver.hpp"
#include "galerob/repcheck.hpp"
#include "galerob/theta.hpp"
#include "galerob/verify.hpp"

using namespace galerob;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct ParamFlags {
  std::optional<int> a, c, N;

  void attach(CLI::App* sub) {
    sub->add_option("--a", a, "parameter a (1 <= a < N)");
    sub->add_option("--c", c, "parameter c (1 <= c < N)");
    sub->add_option("--N", N, "number of vertices");
  }
  bool given() const { return a || c || N; }
  GRParams require() const {
    if (!a || !c || !N) throw CLI::RequiredError("--a, --c and --N");
    return make_params(*a, *c, *N);
  }
  // With an input file the parameters come from the file; flags, if given,
  // must agree with it.
  void check_against(const GRParams& p) const {
    if (given() && !(require() == p)) {
      throw Error(ErrorCode::InvalidParams, "--a/--c/--N disagree with the input file");
    }
  }
};

void emit(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    write_file(out, text);
  }
}

std::string dump(const Json& j) { return to_text(j); }

std::set<int> parse_vertex_set(const std::string& text) {
  const auto v = parse_sequence(text);
  return {v.begin(), v.end()};
}

// ---------------------------------------------------------------------------

struct QuiverCmd {
  ParamFlags params;
  std::string out, dot;

  int run() const {
    const Quiver q = build_quiver(params.require());
    emit(out, dump(quiver_to_json(q)));
    if (!dot.empty()) write_file(dot, export_dot(q));
    std::map<std::string, int> census;
    for (const auto& a : q.arrows()) ++census[std::string(kind_name(a.kind))];
    std::cerr << "arrows: " << q.arrows().size();
    for (auto k : kAllKinds) {
      const auto it = census.find(std::string(kind_name(k)));
      if (it != census.end()) std::cerr << "  " << it->first << "=" << it->second;
    }
    std::cerr << "\n";
    return kOk;
  }
};

struct SequenceCmd {
  ParamFlags params;
  int lo = 1;
  std::optional<int> hi;
  std::string spec = "1";
  bool symbolic = false;
  std::string out;

  int run() const {
    const GRParams p = params.require();
    const int top = hi.value_or(p.N + 10);
    if (symbolic) {
      std::ostringstream os;
      for (const auto& [i, x] : gr_sequence(p, lo, top)) os << "x" << i << " = " << x.to_string('x') << "\n";
      emit(out, os.str());
      return kOk;
    }
    mpq_class value;
    const std::string v = spec.rfind("x=", 0) == 0 ? spec.substr(2) : spec;
    if (value.set_str(v, 10) != 0) throw Error(ErrorCode::ParseError, "bad --spec value", spec);
    value.canonicalize();
    emit(out, sequence_csv(gr_specialized(p, lo, top, value)));
    return kOk;
  }
};

struct PosetCmd {
  ParamFlags params;
  std::optional<int> j;
  std::vector<std::string> cyclic;
  std::optional<std::int64_t> t;
  std::size_t budget = kDefaultBudget;
  std::string out;

  int run() const {
    const GRParams p = params.require();
    DegreeSet s;
    if (j) {
      s = build_Sj(p, *j);
    } else {
      if (cyclic.size() != 3) throw CLI::ValidationError("--cyclic", "expects v, vbar and mu");
      int v = 0;
      try {
        v = std::stoi(cyclic[0]);
      } catch (const std::logic_error&) {
        throw Error(ErrorCode::ParseError, "bad vertex", cyclic[0]);
      }
      const Weight mu = parse_weight(cyclic[2]);
      if (t && level(p, mu) - *t != v) {
        throw Error(ErrorCode::OutOfBand, "mu is not over vertex v at the given t", to_string(mu));
      }
      s = build_cyclic(p, v, parse_vertex_set(cyclic[1]), mu, budget);
    }
    Json doc = degreeset_to_json(s);
    doc["predicates"] = flags_to_json(predicate_flags(s));
    doc["order_ideals"] = count_order_ideals(s).get_str();
    emit(out, dump(doc));
    return kOk;
  }
};

struct FpolyCmd {
  ParamFlags params;
  std::optional<int> j;
  std::string input;
  std::string side;
  int threads = 1;
  std::string out;

  int run() const {
    DegreeSet s;
    Side sd;
    std::string label;
    if (j) {
      s = build_Sj(params.require(), *j);
      if (side == "pos" || side == "ideals") {
        sd = Side::Ideals;
        label = "F_" + std::to_string(s.params.N + *j);
      } else if (side == "neg" || side == "filters") {
        sd = Side::Filters;
        label = "F_" + std::to_string(1 - *j);
      } else {
        throw CLI::ValidationError("--side", "must be pos or neg");
      }
    } else {
      s = degreeset_from_json(parse_json(read_file(input)));
      params.check_against(s.params);
      if (side == "filters") {
        sd = Side::Filters;
      } else if (side == "ideals") {
        sd = Side::Ideals;
      } else {
        throw CLI::ValidationError("--side", "must be filters or ideals");
      }
      label = "F(" + side + ")";
    }
    std::cerr << label << "\n";
    emit(out, f_polynomial(s, sd, threads).to_string('y') + "\n");
    return kOk;
  }
};

struct ThetaCmd {
  ParamFlags params;
  std::string input;
  int steps = 1;
  bool inverse = false;
  bool allow_disconnected = false;
  std::string sequence;
  std::string out;

  int run() const {
    const DegreeSet s = degreeset_from_json(parse_json(read_file(input)));
    params.check_against(s.params);
    if (steps < 0) throw CLI::ValidationError("--steps", "must be non-negative; use --inverse");
    if (steps == 0) {
      emit(out, dump(degreeset_to_json(s)));
      return kOk;
    }
    ThetaOptions opts;
    opts.allow_disconnected = allow_disconnected;
    const OrbitReport rep = theta_orbit(s, inverse ? -steps : steps, opts);
    Json doc = orbit_to_json(rep);
    std::string failed_seq;
    if (!sequence.empty()) {
      const Direction dir = inverse ? Direction::ThetaInverse : Direction::Theta;
      auto seq = parse_sequence(sequence);
      Json seqs = Json::array();
      for (std::size_t i = 0; i < rep.steps.size(); ++i) {
        seq = track_mutation_sequence(seq, s.params.N, dir);
        seqs.push_back(format_sequence(seq));
      }
      doc["mutation_sequences"] = seqs;
      // the step that failed still has a well-defined mutation sequence
      if (rep.failure) {
        failed_seq = format_sequence(track_mutation_sequence(seq, s.params.N, dir));
        doc["failure"]["mutation_sequence"] = failed_seq;
      }
    }
    emit(out, dump(doc));
    if (rep.failure) {
      std::cerr << "step " << rep.failure->step << " failed: " << rep.failure->message;
      if (!failed_seq.empty()) std::cerr << " (mutation sequence " << failed_seq << ")";
      std::cerr << "\n";
      return kVerifyFailed;
    }
    return kOk;
  }
};

struct VerifyCmd {
  ParamFlags params;
  int jmax = 8;
  std::size_t brute_cap = 15;
  int threads = 1;
  std::optional<int> corrupt_column;
  std::string out;

  int run() const {
    VerifyConfig cfg;
    cfg.params = params.require();
    cfg.jmax = jmax;
    cfg.brute_cap = brute_cap;
    cfg.threads = threads;
    if (corrupt_column) {
      if (*corrupt_column < 1 || *corrupt_column > 8) throw CLI::ValidationError("--corrupt-table", "column 1..8");
      // drop the column by pointing it at an impossible pattern
      cfg.theta.table[static_cast<std::size_t>(*corrupt_column - 1)] = Dims{9, 9, 9, 9};
    }
    const VerifyReport rep = run_verification(cfg);
    emit(out, dump(rep.to_json()));
    for (const auto& c : rep.checks) std::cerr << c.status() << "  " << c.check << "\n";
    return rep.passed() ? kOk : kVerifyFailed;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gale-Robinson quivers, degree sets, theta orbits and F-polynomials"};
  app.require_subcommand(1);
  int threads = 1;
  app.add_option("--threads", threads, "worker threads for enumeration")->envname("GALEROB_THREADS")->check(CLI::PositiveNumber);

  QuiverCmd quiver;
  auto* q = app.add_subcommand("quiver", "build the quiver; JSON to stdout or --out");
  quiver.params.attach(q);
  q->add_option("--out", quiver.out, "quiver JSON file");
  q->add_option("--dot", quiver.dot, "DOT file");

  SequenceCmd sequence;
  auto* sq = app.add_subcommand("sequence", "terms of the Gale-Robinson sequence");
  sequence.params.attach(sq);
  sq->add_option("--lo", sequence.lo, "first index (<= 1)");
  sq->add_option("--hi", sequence.hi, "last index (>= N, default N+10)");
  sq->add_option("--spec", sequence.spec, "value of every initial variable, e.g. 1 or x=2/3");
  sq->add_flag("--symbolic", sequence.symbolic, "print Laurent polynomials instead of CSV");
  sq->add_option("--out", sequence.out, "output file");

  PosetCmd poset;
  auto* po = app.add_subcommand("poset", "degree set S^(j) or a cyclic construction");
  poset.params.attach(po);
  auto* pj = po->add_option("--j", poset.j, "build S^(j)");
  auto* pc = po->add_option("--cyclic", poset.cyclic, "v vbar mu, e.g. 1 \"1,2,3\" \"(-2,0,0,0)\"")->expected(3);
  pj->excludes(pc);
  po->add_option("--t", poset.t, "expected level t for --cyclic");
  po->add_option("--budget", poset.budget, "point budget for --cyclic");
  po->add_option("--out", poset.out, "output file");

  FpolyCmd fpoly;
  auto* fp = app.add_subcommand("fpoly", "F-polynomial by filter/ideal enumeration");
  fpoly.params.attach(fp);
  auto* fj = fp->add_option("--j", fpoly.j, "use S^(j)");
  auto* fi = fp->add_option("--input", fpoly.input, "degree set JSON");
  fj->excludes(fi);
  fp->add_option("--side", fpoly.side, "pos|neg with --j, filters|ideals with --input")->required();
  fp->add_option("--out", fpoly.out, "output file");

  ThetaCmd theta_cmd;
  auto* th = app.add_subcommand("theta", "iterate theta on a degree set");
  theta_cmd.params.attach(th);
  th->add_option("--input", theta_cmd.input, "degree set JSON")->required();
  th->add_option("--steps", theta_cmd.steps, "number of steps");
  th->add_flag("--inverse", theta_cmd.inverse, "apply theta^-1 instead");
  th->add_flag("--allow-disconnected", theta_cmd.allow_disconnected, "warn instead of failing on disconnected sets");
  th->add_option("--sequence", theta_cmd.sequence, "mutation sequence of the input, e.g. 2");
  th->add_option("--out", theta_cmd.out, "output file");

  VerifyCmd verify;
  auto* ve = app.add_subcommand("verify", "run the cross-verification suite");
  verify.params.attach(ve);
  ve->add_option("--jmax", verify.jmax, "largest j for S^(j)");
  ve->add_option("--brute-cap", verify.brute_cap, "largest set for the brute-force oracle");
  ve->add_option("--corrupt-table", verify.corrupt_column, "testing: disable one column of the theta table")
      ->group("Testing");
  ve->add_option("--out", verify.out, "report file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*q) return quiver.run();
    if (*sq) return sequence.run();
    if (*po) {
      if (!poset.j && poset.cyclic.empty()) throw CLI::RequiredError("--j or --cyclic");
      return poset.run();
    }
    if (*fp) {
      if (!fpoly.j && fpoly.input.empty()) throw CLI::RequiredError("--j or --input");
      fpoly.threads = threads;
      return fpoly.run();
    }
    if (*th) return theta_cmd.run();
    if (*ve) {
      verify.threads = threads;
      return verify.run();
    }
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what();
    if (!e.witness().empty()) std::cerr << " [" << e.witness() << "]";
    std::cerr << "\n";
    return kUsage;
  }
  return kUsage;
}
