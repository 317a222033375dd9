#pragma once

// Slow, independent reimplementations used to cross-check the library.
// Nothing here calls into the code it is checking.

#include <map>
#include <set>
#include <tuple>
#include <vector>

#include <Eigen/Core>
#include <gmpxx.h>

#include "galerob/lattice.hpp"
#include "galerob/laurent.hpp"

namespace oracle {

using galerob::GRParams;
using galerob::Weight;

struct RawArrow {
  int source, target;
  const char* kind;
  auto operator<=>(const RawArrow& o) const { return std::tie(source, target) <=> std::tie(o.source, o.target); }
};

inline int norm(int v, int N) { return ((v - 1) % N + N) % N + 1; }

// Straight scan of the eight existence conditions, written out longhand.
inline std::vector<RawArrow> arrows(int a, int c, int N) {
  const int b = N - a, d = N - c;
  std::vector<RawArrow> out;
  for (int i = 1; i <= N; ++i) {
    if (i + a <= N) out.push_back({i, i + a, "East"});
    if (i + b <= N) out.push_back({i, i + b, "West"});
    if (i - c >= 1) out.push_back({i, i - c, "South"});
    if (i - d >= 1) out.push_back({i, i - d, "North"});
    if (i + a > N && i - c < 1) out.push_back({i, norm(i + a - c, N), "Southeast"});
    if (i + a > N && i - d < 1) out.push_back({i, norm(i + a - d, N), "Northeast"});
    if (i + b > N && i - c < 1) out.push_back({i, norm(i + b - c, N), "Southwest"});
    if (i + b > N && i - d < 1) out.push_back({i, norm(i + b - d, N), "Northwest"});
  }
  return out;
}

inline Eigen::MatrixXi adjacency(int a, int c, int N) {
  Eigen::MatrixXi m = Eigen::MatrixXi::Zero(N, N);
  for (const auto& r : arrows(a, c, N)) m(r.source - 1, r.target - 1) += 1;
  return m;
}

// Fomin-Zelevinsky matrix mutation on the skew-symmetric exchange matrix.
inline Eigen::MatrixXi fz_mutate(const Eigen::MatrixXi& B, int k) {
  Eigen::MatrixXi out = B;
  const int n = static_cast<int>(B.rows());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == k || j == k) {
        out(i, j) = -B(i, j);
      } else {
        const int bik = B(i, k), bkj = B(k, j);
        out(i, j) = B(i, j) + (std::abs(bik) * bkj + bik * std::abs(bkj)) / 2;
      }
    }
  return out;
}

// x_lo..x_hi with every initial value 1, in plain rationals.
inline std::map<int, mpq_class> recurrence(int a, int c, int N, int lo, int hi) {
  std::map<int, mpq_class> x;
  for (int i = 1; i <= N; ++i) x[i] = 1;
  for (int i = N + 1; i <= hi; ++i) {
    const int k = i - N;
    x[i] = (x[k + a] * x[k + N - a] + x[k + c] * x[k + N - c]) / x[k];
  }
  for (int i = 0; i >= lo; --i) {
    x[i] = (x[i + a] * x[i + N - a] + x[i + c] * x[i + N - c]) / x[i + N];
  }
  return x;
}

// Schoolbook product over term lists.
inline galerob::LaurentPoly naive_mul(const galerob::LaurentPoly& p, const galerob::LaurentPoly& q) {
  galerob::LaurentPoly r(p.arity());
  for (const auto& [e1, c1] : p.terms())
    for (const auto& [e2, c2] : q.terms()) {
      std::vector<int> e(e1.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, c1 * c2);
    }
  return r;
}

inline std::int64_t lvl(const GRParams& p, const Weight& w) {
  return p.a * w[0] + (p.N - p.a) * w[1] - p.c * w[2] - (p.N - p.c) * w[3];
}

inline bool le(const Weight& x, const Weight& y) {
  for (std::size_t i = 0; i < 4; ++i)
    if (x[i] > y[i]) return false;
  return true;
}

// All lambda in [mu, mu + reach] inside the band whose interval [mu, lambda]
// meets the band only over vertices in vbar.
inline std::set<Weight> cyclic_by_box(const GRParams& p, int v, const std::set<int>& vbar, const Weight& mu,
                                      int reach) {
  const std::int64_t t = lvl(p, mu) - v;
  auto in_band = [&](const Weight& w) { return lvl(p, w) >= t + 1 && lvl(p, w) <= t + p.N; };
  std::set<Weight> out;
  const Weight hi = mu + Weight{reach, reach, reach, reach};
  galerob::for_each_in_box(mu, hi, [&](const Weight& lam) {
    if (!in_band(lam)) return;
    bool ok = true;
    galerob::for_each_in_box(mu, lam, [&](const Weight& y) {
      if (ok && in_band(y) && !vbar.count(static_cast<int>(lvl(p, y) - t))) ok = false;
    });
    if (ok) out.insert(lam);
  });
  return out;
}

// Every down-closed subset by a 2^n scan.
inline std::vector<std::set<Weight>> ideals(const std::set<Weight>& s) {
  const std::vector<Weight> pts(s.begin(), s.end());
  const std::size_t n = pts.size();
  std::vector<std::set<Weight>> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    bool closed = true;
    for (std::size_t i = 0; i < n && closed; ++i) {
      if (!((m >> i) & 1)) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!((m >> j) & 1) && le(pts[j], pts[i])) closed = false;
    }
    if (!closed) continue;
    std::set<Weight> r;
    for (std::size_t i = 0; i < n; ++i)
      if ((m >> i) & 1) r.insert(pts[i]);
    out.push_back(std::move(r));
  }
  return out;
}

// Ideal-side F-polynomial: sum over ideals of prod y_{t+N+1-level}.
inline galerob::LaurentPoly f_ideals(const GRParams& p, std::int64_t t, const std::set<Weight>& s) {
  galerob::LaurentPoly f(p.N);
  for (const auto& id : ideals(s)) {
    std::vector<int> e(static_cast<std::size_t>(p.N), 0);
    for (const auto& w : id) ++e[static_cast<std::size_t>(t + p.N + 1 - lvl(p, w) - 1)];
    f.add_term(e, 1);
  }
  return f;
}

// S^(j) straight from its defining inequalities.
inline std::set<Weight> sj_points(const GRParams& p, int j) {
  std::set<Weight> out;
  const int r = j + 2;
  galerob::for_each_in_box(Weight{0, 0, -r, -r}, Weight{r, r, 0, 0}, [&](const Weight& w) {
    const auto l = lvl(p, w);
    if (l >= j - p.N && l <= j - 1) out.insert(w);
  });
  return out;
}

}  // namespace oracle
