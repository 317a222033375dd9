#include "galerob/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "galerob/error.hpp"

namespace galerob {

namespace {

template <typename F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed ") + what, e.what());
  }
}

void write(std::ostream& os, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  const std::string close(static_cast<std::size_t>(indent), ' ');
  if (j.is_object() && !j.empty()) {
    os << "{\n";
    std::size_t i = 0;
    for (const auto& [k, v] : j.items()) {
      os << pad << Json(k).dump() << ": ";
      write(os, v, indent + 2);
      os << (++i < j.size() ? ",\n" : "\n");
    }
    os << close << '}';
  } else if (j.is_array() && !j.empty()) {
    const bool flat = std::none_of(j.begin(), j.end(), [](const Json& e) { return e.is_structured(); });
    if (flat) {
      os << '[';
      for (std::size_t i = 0; i < j.size(); ++i) os << (i ? ", " : "") << j[i].dump();
      os << ']';
      return;
    }
    os << "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      os << pad;
      write(os, j[i], indent + 2);
      os << (i + 1 < j.size() ? ",\n" : "\n");
    }
    os << close << ']';
  } else {
    os << j.dump();
  }
}

}  // namespace

std::string to_text(const Json& j) {
  std::ostringstream os;
  write(os, j, 0);
  os << '\n';
  return os.str();
}

Json params_to_json(const GRParams& p) { return Json{{"a", p.a}, {"c", p.c}, {"N", p.N}}; }

GRParams params_from_json(const Json& j) {
  return guarded("params", [&] { return make_params(j.at("a").get<int>(), j.at("c").get<int>(), j.at("N").get<int>()); });
}

Json weight_to_json(const Weight& w) { return Json::array({w[0], w[1], w[2], w[3]}); }

Weight weight_from_json(const Json& j) {
  return guarded("weight", [&] {
    if (j.is_string()) return parse_weight(j.get<std::string>());
    if (!j.is_array() || j.size() != 4) throw Error(ErrorCode::ParseError, "weight must have four entries", j.dump());
    return Weight{j[0].get<std::int64_t>(), j[1].get<std::int64_t>(), j[2].get<std::int64_t>(),
                  j[3].get<std::int64_t>()};
  });
}

Json quiver_to_json(const Quiver& q) {
  Json arrows = Json::array();
  for (const auto& a : q.arrows()) {
    arrows.push_back({{"source", a.source}, {"target", a.target}, {"kind", std::string(kind_name(a.kind))}});
  }
  return Json{{"params", params_to_json(q.params())}, {"arrows", arrows}};
}

Quiver quiver_from_json(const Json& j) {
  return guarded("quiver", [&] {
    const GRParams p = params_from_json(j.at("params"));
    std::vector<Arrow> arrows;
    for (const auto& a : j.at("arrows")) {
      arrows.push_back({a.at("source").get<int>(), a.at("target").get<int>(), parse_kind(a.at("kind").get<std::string>())});
    }
    return Quiver(p, std::move(arrows));
  });
}

Json degreeset_to_json(const DegreeSet& s) {
  Json pts = Json::array();
  for (const auto& w : s.points) pts.push_back(weight_to_json(w));
  return Json{{"params", params_to_json(s.params)}, {"t", s.t}, {"points", pts}};
}

DegreeSet degreeset_from_json(const Json& j) {
  return guarded("degree set", [&] {
    DegreeSet s{params_from_json(j.at("params")), j.at("t").get<std::int64_t>(), {}};
    for (const auto& w : j.at("points")) s.points.insert(weight_from_json(w));
    check_in_band(s);
    return s;
  });
}

Json flags_to_json(const PredicateFlags& f) {
  return Json{{"interval_closed", f.interval_closed}, {"connected", f.connected}, {"sturdy", f.sturdy}};
}

Json theta_result_to_json(const ThetaResult& r) {
  Json j = degreeset_to_json(r.output);
  Json prov = Json::array();
  for (const auto& p : r.provenance) prov.push_back({{"point", weight_to_json(p.point)}, {"column_index", p.column}});
  j["provenance"] = prov;
  j["predicates"] = flags_to_json(r.output_flags);
  if (!r.warnings.empty()) j["warnings"] = r.warnings;
  return j;
}

DegreeSet theta_output_from_json(const Json& j) { return degreeset_from_json(j); }

Json orbit_to_json(const OrbitReport& r) {
  Json steps = Json::array();
  for (const auto& s : r.steps) steps.push_back(theta_result_to_json(s));
  Json j{{"direction", r.inverse ? "theta_inverse" : "theta"},
         {"start", degreeset_to_json(r.start)},
         {"steps", steps}};
  if (r.failure) {
    j["failure"] = Json{{"step", r.failure->step},
                        {"predicate", std::string(to_string(r.failure->predicate))},
                        {"witness", r.failure->witness},
                        {"message", r.failure->message}};
  } else {
    j["failure"] = nullptr;
  }
  return j;
}

Json report_to_json(const CheckReport& r) {
  return Json{{"check", r.check}, {"status", r.status()}, {"witnesses", r.witnesses}};
}

CheckReport report_from_json(const Json& j) {
  return guarded("report", [&] {
    CheckReport r;
    r.check = j.at("check").get<std::string>();
    const auto status = j.at("status").get<std::string>();
    r.passed = status != "fail";
    r.skipped = status == "skip";
    r.witnesses = j.at("witnesses").get<std::vector<std::string>>();
    return r;
  });
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, "invalid JSON", e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open file", path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write file", path);
  out << content;
}

}  // namespace galerob
