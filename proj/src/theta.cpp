#include "galerob/theta.hpp"

#include <sstream>

namespace galerob {

namespace {

int indicator(const DegreeSet& s, const Weight& w) { return s.contains(w) ? 1 : 0; }

constexpr Weight kE12{1, 1, 0, 0};
constexpr Weight kE34{0, 0, 1, 1};

// Rewrites a weight-valued witness into the coordinates of the negated set.
Error negated_error(const Error& e) {
  std::string w = e.witness();
  try {
    if (!w.empty()) w = to_string(-parse_weight(w));
  } catch (const Error&) {
  }
  std::string msg = e.what();
  const auto colon = msg.find(": ");
  if (colon != std::string::npos) msg = msg.substr(colon + 2);
  return Error(e.code(), msg + " (inverse direction)", w);
}

ThetaResult transport(const ThetaResult& r, DegreeSet output, Weight (*f)(const Weight&)) {
  ThetaResult out;
  out.output = std::move(output);
  for (const auto& p : r.provenance) out.provenance.push_back({f(p.point), p.column});
  for (const auto& c : r.candidates) out.candidates.push_back({f(c.point), c.dims, c.column});
  out.output_flags = predicate_flags(out.output);
  out.warnings = r.warnings;
  return out;
}

Weight negate_point(const Weight& w) { return -w; }
Weight sigma_point(const Weight& w) { return sigma(w); }

}  // namespace

PredicateFlags predicate_flags(const DegreeSet& s) {
  return {is_interval_closed(s), is_connected(s), is_sturdy(s)};
}

Dims theta_dims(const DegreeSet& s, const Weight& l) {
  return {indicator(s, l - kE12), indicator(s, l - kE2) + indicator(s, l - kE1),
          indicator(s, l + kE4) + indicator(s, l + kE3), indicator(s, l + kE34)};
}

std::vector<std::string> check_theta_preconditions(const DegreeSet& s, const ThetaOptions& opts) {
  const GRParams& p = s.params;
  if (p.a == p.c || p.a == p.d()) {
    throw Error(ErrorCode::TwoCycleAtVertexOne, "vertex 1 lies on a 2-cycle ({a,b} = {c,d})", "1");
  }
  check_in_band(s);
  if (auto v = interval_violation(s)) {
    throw Error(ErrorCode::NotIntervalClosed,
                "band point between " + to_string(v->x) + " and " + to_string(v->z) + " is missing",
                to_string(v->y));
  }
  std::vector<std::string> warnings;
  if (!is_connected(s)) {
    if (!opts.allow_disconnected) throw Error(ErrorCode::NotConnected, "degree set is not connected");
    warnings.push_back("degree set is not connected; theta may not be multiplicity free");
  }
  if (auto w = sturdy_violation(s)) {
    throw Error(ErrorCode::NotSturdy, "bottom-level weight missing from the degree set", to_string(*w));
  }
  if (s.size() == 1 && s.vertex_of(*s.points.begin()) == 1) {
    throw Error(ErrorCode::ThetaUndefined, "simple representation at vertex 1", to_string(*s.points.begin()));
  }
  return warnings;
}

ThetaResult theta(const DegreeSet& s, const ThetaOptions& opts) {
  ThetaResult r;
  r.warnings = check_theta_preconditions(s, opts);
  const GRParams& p = s.params;
  const int N = p.N;
  r.output = DegreeSet{p, s.t + 1, {}};
  for (const auto& w : s.points) {
    if (s.vertex_of(w) != 1) r.output.points.insert(w);
  }

  std::set<Weight> cand;
  const auto translate = [&](int v, const Weight& shift) {
    for (const auto& w : s.at_vertex(v)) cand.insert(w + shift);
  };
  translate(1, kE12);
  translate(1 + p.a, kE2);
  translate(1 + p.b(), kE1);
  translate(1 + p.c, -kE4);
  translate(1 + p.d(), -kE3);
  translate(1, -kE34);

  for (const auto& l : cand) {
    if (level(p, l) != s.t + N + 1) {
      throw Error(ErrorCode::InternalError, "candidate off the new level", to_string(l));
    }
    Candidate c{l, theta_dims(s, l), 0};
    for (std::size_t k = 0; k < opts.table.size(); ++k) {
      if (opts.table[k] == c.dims) {
        c.column = static_cast<int>(k) + 1;
        break;
      }
    }
    if (c.column) {
      r.output.points.insert(l);
      r.provenance.push_back({l, c.column});
    }
    r.candidates.push_back(c);
  }
  r.output_flags = predicate_flags(r.output);
  return r;
}

ThetaResult theta_inverse(const DegreeSet& s, const ThetaOptions& opts) {
  ThetaResult fwd;
  try {
    fwd = theta(negate(s), opts);
  } catch (const Error& e) {
    throw negated_error(e);
  }
  return transport(fwd, negate(fwd.output), negate_point);
}

ThetaResult theta_inverse_opposite(const DegreeSet& s, const ThetaOptions& opts) {
  const ThetaResult fwd = theta(sigma(s), opts);
  return transport(fwd, sigma(fwd.output), sigma_point);
}

OrbitReport theta_orbit(const DegreeSet& s, int k, const ThetaOptions& opts) {
  OrbitReport rep;
  rep.start = s;
  rep.inverse = k < 0;
  const int n = k < 0 ? -k : k;
  for (int step = 1; step <= n; ++step) {
    try {
      rep.steps.push_back(rep.inverse ? theta_inverse(rep.last(), opts) : theta(rep.last(), opts));
    } catch (const Error& e) {
      std::string msg = e.what();
      rep.failure = OrbitFailure{step, e.code(), e.witness(), msg};
      break;
    }
  }
  return rep;
}

std::vector<int> track_mutation_sequence(const std::vector<int>& seq, int N, Direction dir) {
  std::vector<int> out;
  out.reserve(seq.size() + 1);
  const int shift = dir == Direction::Theta ? -1 : 1;
  out.push_back(dir == Direction::Theta ? N : 1);
  for (int v : seq) out.push_back(wrap_vertex(v + shift, N));
  return out;
}

std::string format_sequence(const std::vector<int>& seq) {
  std::ostringstream os;
  for (std::size_t i = 0; i < seq.size(); ++i) os << (i ? "," : "") << seq[i];
  return os.str();
}

std::vector<int> parse_sequence(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::ParseError, "bad vertex label in sequence", item);
    }
  }
  return out;
}

}  // namespace galerob
