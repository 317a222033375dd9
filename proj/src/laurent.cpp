#include "galerob/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

#include "galerob/error.hpp"

namespace galerob {

namespace {

void require_same_arity(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.arity() != q.arity()) {
    throw Error(ErrorCode::ArityMismatch,
                "arity " + std::to_string(p.arity()) + " vs " + std::to_string(q.arity()));
  }
}

LaurentPoly::Exponents add_exponents(const LaurentPoly::Exponents& x, const LaurentPoly::Exponents& y) {
  LaurentPoly::Exponents out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + y[i];
  return out;
}

}  // namespace

LaurentPoly LaurentPoly::constant(int arity, const Coeff& c) {
  LaurentPoly p(arity);
  p.add_term(Exponents(static_cast<std::size_t>(arity), 0), c);
  return p;
}

LaurentPoly LaurentPoly::variable(int arity, int i) {
  if (i < 1 || i > arity) {
    throw Error(ErrorCode::ArityMismatch, "variable index " + std::to_string(i) + " out of range");
  }
  Exponents e(static_cast<std::size_t>(arity), 0);
  e[static_cast<std::size_t>(i - 1)] = 1;
  return monomial(std::move(e));
}

LaurentPoly LaurentPoly::monomial(Exponents e, const Coeff& c) {
  LaurentPoly p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

LaurentPoly::Coeff LaurentPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Coeff(0) : it->second;
}

void LaurentPoly::add_term(const Exponents& e, const Coeff& c) {
  if (static_cast<int>(e.size()) != arity_) {
    throw Error(ErrorCode::ArityMismatch, "exponent vector has the wrong length");
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  require_same_arity(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  require_same_arity(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y) {
  require_same_arity(x, y);
  LaurentPoly out(x.arity());
  for (const auto& [ex, cx] : x.terms_) {
    for (const auto& [ey, cy] : y.terms_) {
      out.add_term(add_exponents(ex, ey), cx * cy);
    }
  }
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly LaurentPoly::pow(int k) const {
  if (k < 0) {
    if (!is_monomial() || abs(terms_.begin()->second) != 1) {
      throw Error(ErrorCode::NotDivisible, "negative power of a non-unit");
    }
    const auto& [e, c] = *terms_.begin();
    Exponents inv(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) inv[i] = -e[i];
    return monomial(std::move(inv), c).pow(-k);
  }
  LaurentPoly result = constant(arity_, 1);
  LaurentPoly base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

mpq_class LaurentPoly::evaluate(std::span<const mpq_class> point) const {
  if (static_cast<int>(point.size()) != arity_) {
    throw Error(ErrorCode::ArityMismatch, "evaluation point has the wrong length");
  }
  mpq_class total = 0;
  for (const auto& [e, c] : terms_) {
    mpq_class term(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      mpq_class f;
      if (e[i] > 0) {
        mpz_pow_ui(f.get_num_mpz_t(), point[i].get_num_mpz_t(), static_cast<unsigned long>(e[i]));
        mpz_pow_ui(f.get_den_mpz_t(), point[i].get_den_mpz_t(), static_cast<unsigned long>(e[i]));
      } else {
        if (point[i] == 0) throw Error(ErrorCode::NotDivisible, "negative power of zero");
        mpz_pow_ui(f.get_num_mpz_t(), point[i].get_den_mpz_t(), static_cast<unsigned long>(-e[i]));
        mpz_pow_ui(f.get_den_mpz_t(), point[i].get_num_mpz_t(), static_cast<unsigned long>(-e[i]));
      }
      f.canonicalize();
      term *= f;
    }
    total += term;
  }
  return total;
}

LaurentPoly LaurentPoly::substitute(std::span<const LaurentPoly> values) const {
  if (static_cast<int>(values.size()) != arity_) {
    throw Error(ErrorCode::ArityMismatch, "substitution needs one value per variable");
  }
  if (values.empty()) return *this;
  const int out_arity = values.front().arity();
  LaurentPoly out(out_arity);
  for (const auto& [e, c] : terms_) {
    LaurentPoly term = constant(out_arity, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) term *= values[i].pow(e[i]);
    }
    out += term;
  }
  return out;
}

std::string LaurentPoly::to_string(char var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    const mpz_class mag = abs(c);
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      std::string f = std::string(1, var) + std::to_string(i + 1);
      if (e[i] != 1) f += "^" + std::to_string(e[i]);
      factors.push_back(std::move(f));
    }
    if (factors.empty()) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    for (std::size_t k = 0; k < factors.size(); ++k) {
      if (k) os << '*';
      os << factors[k];
    }
  }
  return os.str();
}

LaurentPoly LaurentPoly::parse(std::string_view text, int arity, char var) {
  const auto fail = [&](const std::string& why) {
    throw Error(ErrorCode::ParseError, why + " in '" + std::string(text) + "'");
  };
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  LaurentPoly out(arity);
  if (s == "0") return out;
  std::size_t pos = 0;
  const auto read_int = [&]() -> std::string {
    std::size_t start = pos;
    if (pos < s.size() && s[pos] == '-') ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start || (s[start] == '-' && pos == start + 1)) fail("expected an integer");
    return s.substr(start, pos - start);
  };
  if (s.empty()) fail("empty polynomial");
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      fail("expected + or -");
    }
    mpz_class coeff = 1;
    Exponents e(static_cast<std::size_t>(arity), 0);
    bool expect_factor = true;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      coeff = mpz_class(read_int());
      expect_factor = false;
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        expect_factor = true;
      }
    }
    while (expect_factor) {
      if (pos >= s.size() || s[pos] != var) fail("expected variable");
      ++pos;
      const int idx = std::stoi(read_int());
      if (idx < 1 || idx > arity) fail("variable index out of range");
      int power = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        power = std::stoi(read_int());
      }
      e[static_cast<std::size_t>(idx - 1)] += power;
      expect_factor = pos < s.size() && s[pos] == '*';
      if (expect_factor) ++pos;
    }
    out.add_term(e, sign * coeff);
  }
  return out;
}

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q) { return p + q; }
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }

LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q) {
  require_same_arity(p, q);
  if (q.is_zero()) throw Error(ErrorCode::NotDivisible, "division by zero");
  LaurentPoly quotient(p.arity());
  if (p.is_zero()) return quotient;

  // Per variable, the degree range of a product is the sum of the ranges, so
  // every quotient exponent is confined to a known finite box.
  const std::size_t n = static_cast<std::size_t>(p.arity());
  const auto range = [n](const LaurentPoly& f) {
    std::vector<int> lo(n, std::numeric_limits<int>::max());
    std::vector<int> hi(n, std::numeric_limits<int>::min());
    for (const auto& [e, c] : f.terms()) {
      for (std::size_t i = 0; i < n; ++i) {
        lo[i] = std::min(lo[i], e[i]);
        hi[i] = std::max(hi[i], e[i]);
      }
    }
    return std::pair{lo, hi};
  };
  const auto [plo, phi] = range(p);
  const auto [qlo, qhi] = range(q);
  std::vector<int> box_lo(n), box_hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    box_lo[i] = plo[i] - qlo[i];
    box_hi[i] = phi[i] - qhi[i];
    if (box_lo[i] > box_hi[i]) {
      throw Error(ErrorCode::NotDivisible, "degree ranges are incompatible", std::to_string(i + 1));
    }
  }

  const auto& [q_lead_exp, q_lead_coeff] = *q.terms().rbegin();
  LaurentPoly rest = p;
  while (!rest.is_zero()) {
    const auto& [r_exp, r_coeff] = *rest.terms().rbegin();
    LaurentPoly::Exponents e(n);
    for (std::size_t i = 0; i < n; ++i) {
      e[i] = r_exp[i] - q_lead_exp[i];
      if (e[i] < box_lo[i] || e[i] > box_hi[i]) {
        throw Error(ErrorCode::NotDivisible, "nonzero remainder", rest.to_string());
      }
    }
    if (!mpz_divisible_p(r_coeff.get_mpz_t(), q_lead_coeff.get_mpz_t())) {
      throw Error(ErrorCode::NotDivisible, "leading coefficient does not divide", rest.to_string());
    }
    const mpz_class c = r_coeff / q_lead_coeff;
    const auto step = LaurentPoly::monomial(e, c);
    quotient.add_term(e, c);
    rest -= step * q;
  }
  return quotient;
}

std::map<int, LaurentPoly> gr_sequence(const GRParams& params, int lo, int hi) {
  const int N = params.N;
  if (lo > 1 || hi < N) {
    throw Error(ErrorCode::InvalidParams, "window must contain 1..N", std::to_string(lo) + ".." + std::to_string(hi));
  }
  std::map<int, LaurentPoly> x;
  for (int i = 1; i <= N; ++i) x.emplace(i, LaurentPoly::variable(N, i));
  const int a = params.a;
  const int c = params.c;
  // x_i x_{i+N} = x_{i+a} x_{i+N-a} + x_{i+c} x_{i+N-c}
  const auto rhs = [&](int i) { return x.at(i + a) * x.at(i + N - a) + x.at(i + c) * x.at(i + N - c); };
  for (int i = 1; i + N <= hi; ++i) {
    try {
      x.emplace(i + N, exact_div(rhs(i), x.at(i)));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotDivisible) throw;
      throw Error(ErrorCode::NotDivisible, "Laurent phenomenon violated at x_" + std::to_string(i + N), e.witness());
    }
  }
  for (int i = 0; i >= lo; --i) {
    try {
      x.emplace(i, exact_div(rhs(i), x.at(i + N)));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotDivisible) throw;
      throw Error(ErrorCode::NotDivisible, "Laurent phenomenon violated at x_" + std::to_string(i), e.witness());
    }
  }
  return x;
}

std::map<int, mpq_class> gr_specialized(const GRParams& params, int lo, int hi, const mpq_class& value) {
  const int N = params.N;
  if (lo > 1 || hi < N) {
    throw Error(ErrorCode::InvalidParams, "window must contain 1..N", std::to_string(lo) + ".." + std::to_string(hi));
  }
  if (value == 0) throw Error(ErrorCode::NotDivisible, "initial values must be nonzero");
  std::map<int, mpq_class> x;
  for (int i = 1; i <= N; ++i) x.emplace(i, value);
  const int a = params.a;
  const int c = params.c;
  const auto rhs = [&](int i) { return mpq_class(x.at(i + a) * x.at(i + N - a) + x.at(i + c) * x.at(i + N - c)); };
  for (int i = 1; i + N <= hi; ++i) x.emplace(i + N, rhs(i) / x.at(i));
  for (int i = 0; i >= lo; --i) x.emplace(i, rhs(i) / x.at(i + N));
  return x;
}

Seed initial_seed(const Quiver& quiver) {
  Seed s{quiver.multigraph(), {}};
  for (int i = 1; i <= quiver.size(); ++i) s.cluster.push_back(LaurentPoly::variable(quiver.size(), i));
  return s;
}

Seed seed_mutate(const Seed& seed, int k) {
  const int n = seed.quiver.size();
  Multigraph mutated = classical_mutation(seed.quiver, k);
  const int arity = seed.cluster.front().arity();
  LaurentPoly in = LaurentPoly::constant(arity, 1);
  LaurentPoly out = LaurentPoly::constant(arity, 1);
  for (int i = 1; i <= n; ++i) {
    if (const int m = seed.quiver.count(i, k); m > 0) in *= seed.cluster[static_cast<std::size_t>(i - 1)].pow(m);
    if (const int m = seed.quiver.count(k, i); m > 0) out *= seed.cluster[static_cast<std::size_t>(i - 1)].pow(m);
  }
  Seed next{std::move(mutated), seed.cluster};
  next.cluster[static_cast<std::size_t>(k - 1)] = exact_div(in + out, seed.cluster[static_cast<std::size_t>(k - 1)]);
  return next;
}

LaurentPoly yhat(const Multigraph& quiver, int k) {
  const int n = quiver.size();
  LaurentPoly::Exponents e(static_cast<std::size_t>(n), 0);
  for (int j = 1; j <= n; ++j) {
    e[static_cast<std::size_t>(j - 1)] += quiver.count(k, j) - quiver.count(j, k);
  }
  return LaurentPoly::monomial(std::move(e));
}

GVector recover_g_vector(const LaurentPoly& z, const LaurentPoly& f, const Multigraph& quiver) {
  const int n = quiver.size();
  if (f.arity() != n || z.arity() != n) throw Error(ErrorCode::ArityMismatch, "F and z must have N variables");
  if (f.constant_term() != 1) throw Error(ErrorCode::NotMonomial, "F-polynomial must have constant term 1");
  std::vector<LaurentPoly> yh;
  yh.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) yh.push_back(yhat(quiver, k));
  const LaurentPoly denom = f.substitute(yh);
  LaurentPoly q;
  try {
    q = exact_div(z, denom);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotDivisible) throw;
    throw Error(ErrorCode::NotMonomial, "z is not divisible by F(yhat)", e.witness());
  }
  if (!q.is_monomial() || q.terms().begin()->second != 1) {
    throw Error(ErrorCode::NotMonomial, "quotient is not a Laurent monomial", q.to_string());
  }
  const auto& e = q.terms().begin()->first;
  GVector g(n);
  for (int i = 0; i < n; ++i) g(i) = e[static_cast<std::size_t>(i)];
  return g;
}

std::string sequence_csv(const std::map<int, mpq_class>& values) {
  std::ostringstream os;
  os << "index,value\n";
  for (const auto& [i, v] : values) os << i << ',' << v.get_str() << '\n';
  return os.str();
}

}  // namespace galerob
