#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>
#include <gmpxx.h>

#include "galerob/lattice.hpp"
#include "galerob/quiver.hpp"

namespace galerob {

/// Exact multivariate Laurent polynomial with GMP integer coefficients in a
/// fixed number of variables. Terms are kept in a map ordered
/// lexicographically by exponent vector; zero coefficients are never stored.
class LaurentPoly {
 public:
  using Exponents = std::vector<int>;
  using Coeff = mpz_class;
  using TermMap = std::map<Exponents, Coeff>;

  LaurentPoly() = default;
  explicit LaurentPoly(int arity) : arity_(arity) {}

  static LaurentPoly constant(int arity, const Coeff& c);
  /// The variable with 1-based index i.
  static LaurentPoly variable(int arity, int i);
  static LaurentPoly monomial(Exponents e, const Coeff& c = 1);

  int arity() const { return arity_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  /// Coefficient of x^e (zero if absent).
  Coeff coefficient(const Exponents& e) const;
  Coeff constant_term() const { return coefficient(Exponents(static_cast<std::size_t>(arity_), 0)); }

  /// Adds c * x^e, dropping the term if it cancels.
  void add_term(const Exponents& e, const Coeff& c);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly x, const LaurentPoly& y) { return x += y; }
  friend LaurentPoly operator-(LaurentPoly x, const LaurentPoly& y) { return x -= y; }
  friend LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Nonnegative powers; a monomial may also be raised to a negative power.
  LaurentPoly pow(int k) const;

  mpq_class evaluate(std::span<const mpq_class> point) const;
  /// Composition: variable i is replaced by values[i-1]. Negative exponents
  /// require the replacement to be a monomial.
  LaurentPoly substitute(std::span<const LaurentPoly> values) const;

  /// Text form "1 + 2*y1 + y1^2*y2*y3" with the given variable letter.
  std::string to_string(char var = 'x') const;
  static LaurentPoly parse(std::string_view text, int arity, char var = 'x');

 private:
  int arity_ = 0;
  TermMap terms_;
};

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q);

/// r with p = q * r. Leading terms (lexicographic) are eliminated one at a
/// time; any nonzero remainder raises NotDivisible.
LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q);

/// Terms x_lo..x_hi of the Gale-Robinson sequence as Laurent polynomials in
/// the generators x_1..x_N. Requires lo <= 1 and hi >= N.
std::map<int, LaurentPoly> gr_sequence(const GRParams& params, int lo, int hi);

/// The same recurrence with every initial term set to `value`, evaluated in
/// exact rational arithmetic.
std::map<int, mpq_class> gr_specialized(const GRParams& params, int lo, int hi, const mpq_class& value);

struct Seed {
  Multigraph quiver;
  std::vector<LaurentPoly> cluster;
};

Seed initial_seed(const Quiver& quiver);
/// Quiver mutation plus the exchange relation at k.
Seed seed_mutate(const Seed& seed, int k);

/// yhat_k = prod_{k->j} x_j / prod_{i->k} x_i, counting multiplicity.
LaurentPoly yhat(const Multigraph& quiver, int k);
inline LaurentPoly yhat(const Quiver& quiver, int k) { return yhat(quiver.multigraph(), k); }

using GVector = Eigen::VectorXi;

/// Divides z by F(yhat_1, ..., yhat_N) and returns the exponent vector of the
/// quotient. Throws NotMonomial if the quotient has more than one term.
GVector recover_g_vector(const LaurentPoly& z, const LaurentPoly& f, const Multigraph& quiver);
inline GVector recover_g_vector(const LaurentPoly& z, const LaurentPoly& f, const Quiver& quiver) {
  return recover_g_vector(z, f, quiver.multigraph());
}

/// "index,value" CSV with a header line.
std::string sequence_csv(const std::map<int, mpq_class>& values);

}  // namespace galerob
