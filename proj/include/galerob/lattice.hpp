#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>

namespace galerob {

/// Gale-Robinson parameters. Only a, c and N are stored; b = N - a and
/// d = N - c are derived.
struct GRParams {
  int a = 1;
  int c = 1;
  int N = 2;

  int b() const noexcept { return N - a; }
  int d() const noexcept { return N - c; }

  friend bool operator==(const GRParams&, const GRParams&) = default;
};

/// Throws ErrorCode::InvalidParams unless 1 <= a,c < N and gcd(a,c,N) = 1.
GRParams make_params(int a, int c, int N);
bool params_valid(const GRParams& p) noexcept;

/// (a,b,c,d) -> (c,d,a,b): the parameters of the opposite quiver.
GRParams opposite_params(const GRParams& p) noexcept;

/// Representative of v modulo N in 1..N.
inline int wrap_vertex(std::int64_t v, int N) noexcept {
  std::int64_t r = v % N;
  if (r <= 0) r += N;
  return static_cast<int>(r);
}

/// A point of Z^4. Ordered lexicographically; the partial order used by
/// degree sets is the componentwise one, see leq().
struct Weight {
  std::array<std::int64_t, 4> c{0, 0, 0, 0};

  constexpr Weight() = default;
  constexpr Weight(std::int64_t l1, std::int64_t l2, std::int64_t l3, std::int64_t l4)
      : c{l1, l2, l3, l4} {}

  constexpr std::int64_t operator[](std::size_t i) const { return c[i]; }
  constexpr std::int64_t& operator[](std::size_t i) { return c[i]; }

  constexpr Weight& operator+=(const Weight& o) {
    for (std::size_t i = 0; i < 4; ++i) c[i] += o.c[i];
    return *this;
  }
  constexpr Weight& operator-=(const Weight& o) {
    for (std::size_t i = 0; i < 4; ++i) c[i] -= o.c[i];
    return *this;
  }
  friend constexpr Weight operator+(Weight x, const Weight& y) { return x += y; }
  friend constexpr Weight operator-(Weight x, const Weight& y) { return x -= y; }
  friend constexpr Weight operator-(const Weight& x) { return Weight{} - x; }

  friend constexpr auto operator<=>(const Weight&, const Weight&) = default;

  constexpr std::int64_t sum() const { return c[0] + c[1] + c[2] + c[3]; }
};

/// Componentwise x <= y.
constexpr bool leq(const Weight& x, const Weight& y) {
  return x[0] <= y[0] && x[1] <= y[1] && x[2] <= y[2] && x[3] <= y[3];
}

constexpr bool nonnegative(const Weight& x) { return leq(Weight{}, x); }

/// Level a*l1 + b*l2 - c*l3 - d*l4.
inline std::int64_t level(const GRParams& p, const Weight& w) {
  return p.a * w[0] + p.b() * w[1] - p.c * w[2] - p.d() * w[3];
}

/// Swaps l1 <-> l3 and l2 <-> l4.
constexpr Weight sigma(const Weight& w) { return Weight{w[2], w[3], w[0], w[1]}; }

inline constexpr Weight kE1{1, 0, 0, 0};
inline constexpr Weight kE2{0, 1, 0, 0};
inline constexpr Weight kE3{0, 0, 1, 0};
inline constexpr Weight kE4{0, 0, 0, 1};
inline constexpr Weight kFaceWeight{1, 1, 1, 1};

/// Rendered as "(l1,l2,l3,l4)".
std::string to_string(const Weight& w);
/// Parses "(l1,l2,l3,l4)"; parentheses and whitespace optional.
Weight parse_weight(const std::string& text);

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto v : w.c) {
      h ^= std::hash<std::int64_t>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

/// Calls f on every integer point of the box [lo, hi] (componentwise).
template <typename F>
void for_each_in_box(const Weight& lo, const Weight& hi, F&& f) {
  if (!leq(lo, hi)) return;
  Weight w;
  for (w[0] = lo[0]; w[0] <= hi[0]; ++w[0])
    for (w[1] = lo[1]; w[1] <= hi[1]; ++w[1])
      for (w[2] = lo[2]; w[2] <= hi[2]; ++w[2])
        for (w[3] = lo[3]; w[3] <= hi[3]; ++w[3]) f(w);
}

}  // namespace galerob
