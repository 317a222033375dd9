#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "galerob/degreeset.hpp"
#include "galerob/quiver.hpp"

namespace galerob {

/// Rank by fraction-free (Bareiss) elimination; exact for integer scalars as
/// long as the intermediate minors fit in Scalar.
template <typename Derived>
int exact_rank(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m = input;
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Scalar prev = 1;
  int rank = 0;
  for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
    Eigen::Index piv = rank;
    while (piv < rows && m(piv, col) == Scalar(0)) ++piv;
    if (piv == rows) continue;
    m.row(piv).swap(m.row(rank));
    for (Eigen::Index r = rank + 1; r < rows; ++r) {
      for (Eigen::Index c = col + 1; c < cols; ++c) {
        m(r, c) = (m(rank, col) * m(r, c) - m(r, col) * m(rank, c)) / prev;
      }
      m(r, col) = 0;
    }
    prev = m(rank, col);
    ++rank;
  }
  return rank;
}

/// pi f_lambda for a single arrow: lambda + wt(kind) if the arrow leaves the
/// vertex of lambda and the result is in S; empty otherwise. Throws NotInSet.
std::optional<Weight> arrow_action(const DegreeSet& s, ArrowKind kind, const Weight& lambda);

/// Arrow-by-arrow action of a path; empty as soon as the image leaves S.
std::optional<Weight> path_action(const DegreeSet& s, const Path& path, const Weight& lambda);

/// {check, status, witnesses} record shared by every verification.
struct CheckReport {
  std::string check;
  bool passed = true;
  bool skipped = false;
  std::vector<std::string> witnesses;

  std::string status() const { return !passed ? "fail" : skipped ? "skip" : "pass"; }

  void fail(std::string witness) {
    passed = false;
    if (witnesses.size() < 16) witnesses.push_back(std::move(witness));
  }
};

/// (i) for x < z in S and every band point y between them, the direct path
/// x -> z and the path through y must act like the endpoint formula;
/// (ii) the two completing paths of every arrow act identically.
std::vector<CheckReport> verify_action(const Quiver& quiver, const DegreeSet& s);
inline bool action_well_defined(const Quiver& quiver, const DegreeSet& s) {
  const auto reps = verify_action(quiver, s);
  return std::all_of(reps.begin(), reps.end(), [](const CheckReport& r) { return r.passed; });
}

/// The graded maps A -beta-> B -gamma-> C -alpha-> D at a weight of level
/// t+N+1 over the present basis vectors, their ranks and the three
/// dimensions ker(gamma)/im(beta), im(gamma), ker(alpha)/im(gamma).
struct PremutationDims {
  Weight lambda;
  int dimA = 0, dimB = 0, dimC = 0, dimD = 0;
  Eigen::MatrixXi alpha, beta, gamma;
  int rank_alpha = 0, rank_beta = 0, rank_gamma = 0;
  int k1 = 0, k2 = 0, k3 = 0;

  int total() const { return k1 + k2 + k3; }
  /// gamma*beta = 0 and alpha*gamma = 0.
  bool is_complex() const;
  /// alpha, beta full rank; gamma full rank unless dim B = dim C = 2, then 1.
  bool rank_claims_hold() const;
};

PremutationDims premutation_dims(const DegreeSet& s, const Weight& lambda);

struct Subrep {
  std::set<Weight> points;
  /// d_v = number of points over vertex v, v = 1..N.
  std::vector<int> dims;
};

inline constexpr std::size_t kBruteforceCap = 24;

/// All subsets of S closed under the arrow actions, by a 2^|S| scan.
/// Throws TooLarge above `cap` points.
std::vector<Subrep> subrep_bruteforce(const DegreeSet& s, std::size_t cap = kBruteforceCap);
/// Sum of y^d(R) over the brute-force subrepresentations.
LaurentPoly f_polynomial_oracle(const DegreeSet& s, std::size_t cap = kBruteforceCap);

}  // namespace galerob
