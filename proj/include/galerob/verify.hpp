#pragma once

#include <optional>
#include <vector>

#include "galerob/degreeset.hpp"
#include "galerob/json_io.hpp"
#include "galerob/repcheck.hpp"
#include "galerob/theta.hpp"

namespace galerob {

struct VerifyConfig {
  GRParams params;
  int jmax = 8;
  /// Largest degree set handed to the 2^|S| brute force.
  std::size_t brute_cap = 15;
  /// Largest degree set checked by the path-based action verification.
  std::size_t action_cap = 40;
  int gvector_jmax = 6;
  int threads = 1;
  ThetaOptions theta;
};

struct VerifyReport {
  GRParams params;
  std::vector<CheckReport> checks;

  bool passed() const;
  Json to_json() const;
};

/// Face weights, Euler characteristic, face orientation balance, the degree
/// pattern at vertex 1, one-periodicity under mutation at 1 and the dimer
/// alternation.
CheckReport check_geometry(const GRParams& params);

/// Laurent phenomenon for x_lo..x_hi plus agreement with the rational
/// specialization at x = 1.
CheckReport check_laurent(const GRParams& params, int lo, int hi);

/// For each step of theta_orbit(S^(1), jmax-1), compare the theta table decisions with
/// the premutation ranks and the rank claims; also count steps against S^(j).
CheckReport check_oracle_equivalence(const OrbitReport& orbit);

/// Subreps by brute force equal the order filters, and the two F-polynomials
/// agree, for every set of at most `cap` points.
CheckReport check_subreps(const std::vector<DegreeSet>& sets, std::size_t cap);

/// x_{N+j} / F_{N+j}(yhat) is a Laurent monomial for j = 1..jmax.
CheckReport check_g_vectors(const GRParams& params, int jmax);

/// The simple at vertex 2 of the Somos-4 quiver, as a degree set.
DegreeSet simple2_fixture();

VerifyReport run_verification(const VerifyConfig& config);

}  // namespace galerob
