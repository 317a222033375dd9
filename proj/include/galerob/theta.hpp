#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "galerob/degreeset.hpp"
#include "galerob/error.hpp"

namespace galerob {

/// (dim A, dim B, dim C, dim D) for a candidate weight at the new level.
using Dims = std::array<int, 4>;
/// The eight scenarios in which the new vertex-N space is one-dimensional.
using ThetaTable = std::array<Dims, 8>;

inline constexpr ThetaTable kThetaTable{{
    {0, 1, 0, 0},
    {1, 2, 0, 0},
    {0, 1, 1, 0},
    {0, 1, 2, 1},
    {1, 2, 1, 0},
    {1, 2, 2, 1},
    {0, 0, 1, 0},
    {0, 0, 2, 1},
}};

struct ThetaOptions {
  /// Replaceable for fault injection; the real table is kThetaTable.
  ThetaTable table = kThetaTable;
  /// Downgrade the connectivity precondition to a warning.
  bool allow_disconnected = false;
};

/// One examined weight at level t+N+1. `column` is 1..8, or 0 if the
/// dimensions match no column of the table.
struct Candidate {
  Weight point;
  Dims dims{};
  int column = 0;
};

struct Provenance {
  Weight point;
  int column = 0;
};

struct PredicateFlags {
  bool interval_closed = false;
  bool connected = false;
  bool sturdy = false;
};

PredicateFlags predicate_flags(const DegreeSet& s);

struct ThetaResult {
  DegreeSet output;
  /// New points over vertex N with the table column that admitted them.
  std::vector<Provenance> provenance;
  std::vector<Candidate> candidates;
  PredicateFlags output_flags;
  std::vector<std::string> warnings;
};

/// The four-space dimensions around a weight of level t+N+1.
Dims theta_dims(const DegreeSet& s, const Weight& lambda);

/// Throws the first failing precondition of theta: TwoCycleAtVertexOne,
/// InvalidDegreeSet, NotIntervalClosed, NotConnected, NotSturdy,
/// ThetaUndefined. Returns warnings for downgraded checks.
std::vector<std::string> check_theta_preconditions(const DegreeSet& s, const ThetaOptions& opts = {});

ThetaResult theta(const DegreeSet& s, const ThetaOptions& opts = {});
/// negate . theta . negate; witnesses are reported in the coordinates of s.
ThetaResult theta_inverse(const DegreeSet& s, const ThetaOptions& opts = {});
/// The same inverse through the opposite quiver: sigma . theta_opp . sigma.
ThetaResult theta_inverse_opposite(const DegreeSet& s, const ThetaOptions& opts = {});

struct OrbitFailure {
  int step = 0;
  ErrorCode predicate = ErrorCode::InternalError;
  std::string witness;
  std::string message;
};

struct OrbitReport {
  DegreeSet start;
  bool inverse = false;
  std::vector<ThetaResult> steps;
  std::optional<OrbitFailure> failure;

  const DegreeSet& last() const { return steps.empty() ? start : steps.back().output; }
};

/// Applies theta |k| times (theta_inverse when k < 0), stopping at the first
/// failure. Failures are recorded in the report, never thrown.
OrbitReport theta_orbit(const DegreeSet& s, int k, const ThetaOptions& opts = {});

enum class Direction { Theta, ThetaInverse };

/// Theta: prepend N and shift every label down by one; the inverse prepends
/// 1 and shifts up. Labels stay in 1..N.
std::vector<int> track_mutation_sequence(const std::vector<int>& seq, int N, Direction dir);

std::string format_sequence(const std::vector<int>& seq);
std::vector<int> parse_sequence(const std::string& text);

}  // namespace galerob
