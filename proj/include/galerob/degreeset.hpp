#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "galerob/lattice.hpp"
#include "galerob/laurent.hpp"

namespace galerob {

/// A finite subset of the band X_t = {t+1 <= level <= t+N}, the degree set of
/// the calibrated representation M(S, t). Points are kept in lex order.
struct DegreeSet {
  GRParams params;
  std::int64_t t = 0;
  std::set<Weight> points;

  std::size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }
  bool contains(const Weight& w) const { return points.count(w) != 0; }
  bool in_band(const Weight& w) const;
  /// level(w) - t; throws OutOfBand unless w lies in the band.
  int vertex_of(const Weight& w) const;
  /// Points over vertex v, in lex order.
  std::vector<Weight> at_vertex(int v) const;

  friend bool operator==(const DegreeSet&, const DegreeSet&) = default;
};

/// Throws InvalidDegreeSet if some point is outside the band.
void check_in_band(const DegreeSet& s);

inline int vertex_of(const DegreeSet& s, const Weight& w) { return s.vertex_of(w); }

// ---------------------------------------------------------------------------
// predicates

/// A failing interval: x <= y <= z with x, z in S, y in X_t \ S.
struct IntervalWitness {
  Weight x, y, z;
};

std::optional<IntervalWitness> interval_violation(const DegreeSet& s);
inline bool is_interval_closed(const DegreeSet& s) { return !interval_violation(s); }

/// Whether y covers x in X_t: x < y and no band point lies strictly between.
bool covers_in_band(const DegreeSet& s, const Weight& x, const Weight& y);
bool is_connected(const DegreeSet& s);

/// First bottom-level weight breaking the sturdy condition.
std::optional<Weight> sturdy_violation(const DegreeSet& s);
inline bool is_sturdy(const DegreeSet& s) { return !sturdy_violation(s); }

// ---------------------------------------------------------------------------
// posets, filters and ideals

/// The poset (S, componentwise <=) over the lex-sorted points of S, which is
/// a linear extension. Subsets are bitmasks over that order.
class Poset {
 public:
  using Mask = std::vector<std::uint64_t>;

  explicit Poset(std::vector<Weight> elements);
  explicit Poset(const DegreeSet& s) : Poset(std::vector<Weight>(s.points.begin(), s.points.end())) {}

  std::size_t size() const { return elements_.size(); }
  const std::vector<Weight>& elements() const { return elements_; }
  /// Elements >= i (resp. <= i), including i.
  const Mask& up(std::size_t i) const { return up_[i]; }
  const Mask& down(std::size_t i) const { return down_[i]; }

  Mask empty_mask() const { return Mask(words_, 0); }
  Mask full_mask() const;
  static bool test(const Mask& m, std::size_t i) { return (m[i / 64] >> (i % 64)) & 1U; }
  static void set(Mask& m, std::size_t i) { m[i / 64] |= std::uint64_t{1} << (i % 64); }
  std::vector<Weight> members(const Mask& m) const;

  /// Calls f on every order ideal (resp. filter), DFS over the linear
  /// extension; the visiting order is deterministic.
  void for_each_ideal(const std::function<void(const Mask&)>& f) const;
  void for_each_filter(const std::function<void(const Mask&)>& f) const;

  /// Number of order ideals, without enumerating them.
  mpz_class count_ideals() const;

 private:
  std::vector<Weight> elements_;
  std::size_t words_ = 0;
  std::vector<Mask> up_;
  std::vector<Mask> down_;
};

std::vector<std::set<Weight>> order_ideals(const DegreeSet& s);
std::vector<std::set<Weight>> order_filters(const DegreeSet& s);
inline mpz_class count_order_ideals(const DegreeSet& s) { return Poset(s).count_ideals(); }

enum class Side { Filters, Ideals };

/// Filters side: sum over filters R of prod y_{level - t}. Ideals side: sum
/// over ideals I of prod y_{t+N+1-level}, i.e. the filters of -S. Computed by
/// the memoized split F(P) = F(P \ up(x)) + y^{down(x)} F(P \ down(x)); the
/// two top-level branches run on separate threads when threads > 1.
LaurentPoly f_polynomial(const DegreeSet& s, Side side, int threads = 1);

// ---------------------------------------------------------------------------
// constructions

/// S^(j): lambda_1, lambda_2 >= 0, lambda_3, lambda_4 <= 0 and
/// j-N <= level <= j-1, at t = j-N-1.
DegreeSet build_Sj(const GRParams& params, int j);

inline constexpr std::size_t kDefaultBudget = 1'000'000;

/// The lambda >= mu in X_t (t = level(mu) - v) whose whole interval
/// [mu, lambda] within X_t lies over vertices in vbar. Throws InfiniteSet once
/// more than `budget` points have been accepted.
DegreeSet build_cyclic(const GRParams& params, int v, const std::set<int>& vbar, const Weight& mu,
                       std::size_t budget = kDefaultBudget);

/// lambda -> -lambda, t -> -(t+N+1).
DegreeSet negate(const DegreeSet& s);
/// Coordinates 1<->3 and 2<->4, opposite parameters, t -> -(t+N+1).
DegreeSet sigma(const DegreeSet& s);

std::string describe(const DegreeSet& s);

}  // namespace galerob
