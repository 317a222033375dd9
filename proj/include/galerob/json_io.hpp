#pragma once

#include <string>

#include <json.hpp>

#include "galerob/degreeset.hpp"
#include "galerob/quiver.hpp"
#include "galerob/repcheck.hpp"
#include "galerob/theta.hpp"

namespace galerob {

using Json = nlohmann::ordered_json;

Json params_to_json(const GRParams& p);
GRParams params_from_json(const Json& j);

Json weight_to_json(const Weight& w);
Weight weight_from_json(const Json& j);

Json quiver_to_json(const Quiver& q);
Quiver quiver_from_json(const Json& j);

/// {"params", "t", "points"} with points in lex order.
Json degreeset_to_json(const DegreeSet& s);
DegreeSet degreeset_from_json(const Json& j);

Json flags_to_json(const PredicateFlags& f);

/// The output degree set plus "provenance": [{point, column_index}].
Json theta_result_to_json(const ThetaResult& r);
DegreeSet theta_output_from_json(const Json& j);

Json orbit_to_json(const OrbitReport& r);

Json report_to_json(const CheckReport& r);
CheckReport report_from_json(const Json& j);

/// Indented text with arrays of scalars kept on one line, e.g. points as
/// [0, 0, -1, 0]. Ends with a newline.
std::string to_text(const Json& j);

/// Parses text, raising ParseError with the parser's message.
Json parse_json(const std::string& text);
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace galerob
