#include "galerob/degreeset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "galerob/error.hpp"
#include "galerob/quiver.hpp"

namespace galerob {

bool DegreeSet::in_band(const Weight& w) const {
  const auto l = level(params, w);
  return l >= t + 1 && l <= t + params.N;
}

int DegreeSet::vertex_of(const Weight& w) const {
  if (!in_band(w)) {
    throw Error(ErrorCode::OutOfBand, "weight outside X_" + std::to_string(t), to_string(w));
  }
  return static_cast<int>(level(params, w) - t);
}

std::vector<Weight> DegreeSet::at_vertex(int v) const {
  std::vector<Weight> out;
  for (const auto& p : points) {
    if (level(params, p) - t == v) out.push_back(p);
  }
  return out;
}

void check_in_band(const DegreeSet& s) {
  for (const auto& p : s.points) {
    if (!s.in_band(p)) {
      throw Error(ErrorCode::InvalidDegreeSet, "point outside the band X_" + std::to_string(s.t), to_string(p));
    }
  }
}

std::optional<IntervalWitness> interval_violation(const DegreeSet& s) {
  for (const auto& x : s.points) {
    for (auto it = s.points.upper_bound(x); it != s.points.end(); ++it) {
      const Weight& z = *it;
      if (!leq(x, z)) continue;
      std::optional<Weight> hole;
      for_each_in_box(x, z, [&](const Weight& y) {
        if (!hole && s.in_band(y) && !s.contains(y)) hole = y;
      });
      if (hole) return IntervalWitness{x, *hole, z};
    }
  }
  return std::nullopt;
}

bool covers_in_band(const DegreeSet& s, const Weight& x, const Weight& y) {
  if (x == y || !leq(x, y)) return false;
  if ((y - x).sum() == 1) return true;
  bool between = false;
  for_each_in_box(x, y, [&](const Weight& z) {
    if (!between && z != x && z != y && s.in_band(z)) between = true;
  });
  return !between;
}

bool is_connected(const DegreeSet& s) {
  if (s.size() <= 1) return true;
  const std::vector<Weight> pts(s.points.begin(), s.points.end());
  std::vector<std::size_t> parent(pts.size());
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  std::size_t components = pts.size();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      // lex order: pts[j] <= pts[i] componentwise is impossible for j > i
      if (!covers_in_band(s, pts[i], pts[j])) continue;
      const auto ri = find(i), rj = find(j);
      if (ri != rj) {
        parent[ri] = rj;
        --components;
      }
    }
  }
  return components == 1;
}

std::optional<Weight> sturdy_violation(const DegreeSet& s) {
  std::set<Weight> candidates;
  for (const auto& m : s.points) {
    for (const auto& w : {m - kE1, m - kE2, m + kE3, m + kE4}) {
      if (level(s.params, w) == s.t + 1 && !s.contains(w)) candidates.insert(w);
    }
  }
  for (const auto& l : candidates) {
    if (s.contains(l + kE1) && s.contains(l + kE2)) return l;
    if (s.contains(l - kE3) && s.contains(l - kE4)) return l;
  }
  return std::nullopt;
}

std::vector<std::set<Weight>> order_ideals(const DegreeSet& s) {
  const Poset p(s);
  std::vector<std::set<Weight>> out;
  p.for_each_ideal([&](const Poset::Mask& m) {
    const auto mem = p.members(m);
    out.emplace_back(mem.begin(), mem.end());
  });
  return out;
}

std::vector<std::set<Weight>> order_filters(const DegreeSet& s) {
  const Poset p(s);
  std::vector<std::set<Weight>> out;
  p.for_each_filter([&](const Poset::Mask& m) {
    const auto mem = p.members(m);
    out.emplace_back(mem.begin(), mem.end());
  });
  return out;
}

DegreeSet build_Sj(const GRParams& params, int j) {
  if (j < 1) throw Error(ErrorCode::InvalidDegreeSet, "S^(j) needs j >= 1", std::to_string(j));
  const int N = params.N;
  DegreeSet s{params, j - N - 1, {}};
  // all four sign-restricted coordinates push the level up, so each is
  // bounded by (j-1) / coefficient
  const Weight lo{0, 0, -(j - 1) / params.c, -(j - 1) / params.d()};
  const Weight hi{(j - 1) / params.a, (j - 1) / params.b(), 0, 0};
  for_each_in_box(lo, hi, [&](const Weight& w) {
    const auto l = level(params, w);
    if (l >= j - N && l <= j - 1) s.points.insert(w);
  });
  return s;
}

DegreeSet build_cyclic(const GRParams& params, int v, const std::set<int>& vbar, const Weight& mu,
                       std::size_t budget) {
  const int N = params.N;
  if (v < 1 || v > N) throw Error(ErrorCode::InvalidDegreeSet, "vertex out of range", std::to_string(v));
  for (int u : vbar) {
    if (u < 1 || u > N) throw Error(ErrorCode::InvalidDegreeSet, "vbar vertex out of range", std::to_string(u));
  }
  if (!vbar.count(v)) throw Error(ErrorCode::InvalidDegreeSet, "vbar must contain v", std::to_string(v));

  DegreeSet s{params, level(params, mu) - v, {}};
  std::vector<Weight> steps;
  for (auto k : kAllKinds) steps.push_back(kind_weight(k));

  // Visit in order of coordinate sum so every predecessor is decided first.
  std::map<std::int64_t, std::set<Weight>> pending;
  pending[mu.sum()].insert(mu);
  std::unordered_set<Weight, WeightHash> accepted;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    for (const auto& l : node.mapped()) {
      if (!s.in_band(l) || !vbar.count(s.vertex_of(l))) continue;
      bool ok = true;
      for (const auto& w : steps) {
        const Weight p = l - w;
        if (leq(mu, p) && s.in_band(p) && !accepted.count(p)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      accepted.insert(l);
      if (accepted.size() > budget) {
        throw Error(ErrorCode::InfiniteSet, "more than " + std::to_string(budget) + " points", to_string(l));
      }
      for (const auto& w : steps) pending[l.sum() + w.sum()].insert(l + w);
    }
  }
  s.points.insert(accepted.begin(), accepted.end());
  return s;
}

DegreeSet negate(const DegreeSet& s) {
  DegreeSet out{s.params, -(s.t + s.params.N + 1), {}};
  for (const auto& p : s.points) out.points.insert(-p);
  return out;
}

DegreeSet sigma(const DegreeSet& s) {
  DegreeSet out{opposite_params(s.params), -(s.t + s.params.N + 1), {}};
  for (const auto& p : s.points) out.points.insert(sigma(p));
  return out;
}

std::string describe(const DegreeSet& s) {
  std::ostringstream os;
  os << "t=" << s.t << " {";
  bool first = true;
  for (const auto& p : s.points) {
    os << (first ? "" : ", ") << to_string(p);
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace galerob
