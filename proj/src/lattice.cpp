#include "galerob/lattice.hpp"

#include <numeric>
#include <sstream>

#include "galerob/error.hpp"

namespace galerob {

bool params_valid(const GRParams& p) noexcept {
  if (p.N < 2 || p.a < 1 || p.a >= p.N || p.c < 1 || p.c >= p.N) return false;
  return std::gcd(std::gcd(p.a, p.c), p.N) == 1;
}

GRParams make_params(int a, int c, int N) {
  GRParams p{a, c, N};
  if (!params_valid(p)) {
    std::ostringstream os;
    os << "need 1 <= a,c < N and gcd(a,c,N) = 1, got a=" << a << " c=" << c << " N=" << N;
    throw Error(ErrorCode::InvalidParams, os.str());
  }
  return p;
}

GRParams opposite_params(const GRParams& p) noexcept { return GRParams{p.c, p.a, p.N}; }

std::string to_string(const Weight& w) {
  std::ostringstream os;
  os << '(' << w[0] << ',' << w[1] << ',' << w[2] << ',' << w[3] << ')';
  return os.str();
}

Weight parse_weight(const std::string& text) {
  std::string cleaned;
  for (char ch : text) {
    if (ch == '(' || ch == ')' || ch == '[' || ch == ']' || ch == ' ') continue;
    cleaned.push_back(ch == ',' ? ' ' : ch);
  }
  std::istringstream is(cleaned);
  Weight w;
  for (std::size_t i = 0; i < 4; ++i) {
    if (!(is >> w[i])) throw Error(ErrorCode::ParseError, "bad weight literal '" + text + "'");
  }
  std::string rest;
  if (is >> rest) throw Error(ErrorCode::ParseError, "bad weight literal '" + text + "'");
  return w;
}

}  // namespace galerob
