#include "galerob/repcheck.hpp"

#include <map>
#include <sstream>

#include "galerob/error.hpp"

namespace galerob {

namespace {

std::string path_string(const Path& p) {
  std::ostringstream os;
  os << p.start;
  for (const auto& a : p.arrows) os << " -" << kind_name(a.kind) << "-> " << a.target;
  return os.str();
}

Path concat(Path x, const Path& y) {
  x.arrows.insert(x.arrows.end(), y.arrows.begin(), y.arrows.end());
  return x;
}

std::string show(const std::optional<Weight>& w) { return w ? to_string(*w) : std::string("0"); }

}  // namespace

std::optional<Weight> arrow_action(const DegreeSet& s, ArrowKind kind, const Weight& lambda) {
  if (!s.contains(lambda)) throw Error(ErrorCode::NotInSet, "weight is not in the degree set", to_string(lambda));
  const int v = s.vertex_of(lambda);
  if (!arrow_exists(s.params, v, kind)) return std::nullopt;
  const Weight target = lambda + kind_weight(kind);
  if (!s.contains(target)) return std::nullopt;
  return target;
}

std::optional<Weight> path_action(const DegreeSet& s, const Path& path, const Weight& lambda) {
  if (!s.contains(lambda)) return std::nullopt;
  Weight cur = lambda;
  int at = s.vertex_of(lambda);
  if (at != path.start) return std::nullopt;
  for (const auto& a : path.arrows) {
    if (a.source != at) throw Error(ErrorCode::InternalError, "path does not compose", path_string(path));
    auto next = arrow_action(s, a.kind, cur);
    if (!next) return std::nullopt;
    cur = *next;
    at = a.target;
  }
  return cur;
}

std::vector<CheckReport> verify_action(const Quiver& quiver, const DegreeSet& s) {
  CheckReport paths{"action-paths", true, false, {}};
  for (const auto& x : s.points) {
    const int u = s.vertex_of(x);
    for (const auto& z : s.points) {
      if (z == x || !leq(x, z)) continue;
      const Path direct = find_path(quiver, u, z - x);
      const auto expected = std::optional<Weight>(z);
      const auto got = path_action(s, direct, x);
      if (got != expected) {
        paths.fail(to_string(x) + " via " + path_string(direct) + " gives " + show(got) + ", expected " +
                   to_string(z));
      }
      for_each_in_box(x, z, [&](const Weight& y) {
        if (y == x || y == z || !s.in_band(y)) return;
        const int vy = s.vertex_of(y);
        const Path through = concat(find_path(quiver, u, y - x), find_path(quiver, vy, z - y));
        const auto via = path_action(s, through, x);
        if (via != got) {
          paths.fail(to_string(x) + ": " + path_string(direct) + " gives " + show(got) + " but " +
                     path_string(through) + " gives " + show(via) + " (through " + to_string(y) + ")");
        }
      });
    }
  }

  CheckReport jacobian{"jacobian-relations", true, false, {}};
  // Completing paths of each arrow, one per bounding face.
  std::map<std::pair<int, int>, std::vector<Path>> completions;
  for (const auto& f : enumerate_faces(quiver)) {
    const std::size_t n = f.boundary.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Arrow& alpha = f.boundary[i];
      Path rest{alpha.target, {}};
      for (std::size_t k = 1; k < n; ++k) rest.arrows.push_back(f.boundary[(i + k) % n]);
      completions[{alpha.source, static_cast<int>(alpha.kind)}].push_back(std::move(rest));
    }
  }
  for (const auto& [key, comp] : completions) {
    const std::string name = std::to_string(key.first) + "[" +
                             std::string(kind_name(static_cast<ArrowKind>(key.second))) + "]";
    if (comp.size() != 2) {
      jacobian.fail("arrow " + name + " bounds " + std::to_string(comp.size()) + " faces");
      continue;
    }
    if (comp[0].weight() != comp[1].weight()) {
      jacobian.fail("arrow " + name + ": completing paths have different weights");
      continue;
    }
    for (const auto& l : s.at_vertex(comp[0].start)) {
      const auto p = path_action(s, comp[0], l);
      const auto q = path_action(s, comp[1], l);
      if (p != q) {
        jacobian.fail("arrow " + name + " at " + to_string(l) + ": " + path_string(comp[0]) + " gives " + show(p) +
                      " but " + path_string(comp[1]) + " gives " + show(q));
      }
    }
  }
  return {paths, jacobian};
}

bool PremutationDims::is_complex() const {
  const bool gb = beta.size() == 0 || gamma.rows() == 0 || (gamma * beta).isZero();
  const bool ag = gamma.size() == 0 || alpha.rows() == 0 || (alpha * gamma).isZero();
  return gb && ag;
}

bool PremutationDims::rank_claims_hold() const {
  const int g = (dimB == 2 && dimC == 2) ? 1 : std::min(dimB, dimC);
  return rank_alpha == std::min(dimC, dimD) && rank_beta == std::min(dimA, dimB) && rank_gamma == g;
}

PremutationDims premutation_dims(const DegreeSet& s, const Weight& lambda) {
  if (level(s.params, lambda) != s.t + s.params.N + 1) {
    throw Error(ErrorCode::OutOfBand, "premutation weight must have level t+N+1", to_string(lambda));
  }
  PremutationDims d;
  d.lambda = lambda;
  const bool a = s.contains(lambda - kE1 - kE2);
  const std::vector<Weight> b_all{lambda - kE2, lambda - kE1};  // over 1+a, 1+b
  const std::vector<Weight> c_all{lambda + kE4, lambda + kE3};  // over 1+c, 1+d
  const bool dd = s.contains(lambda + kE3 + kE4);
  // signs of the second derivatives of the potential: rows C, columns B
  const int sign[2][2] = {{1, -1}, {-1, 1}};

  std::vector<int> bs, cs;
  for (int i = 0; i < 2; ++i) {
    if (s.contains(b_all[static_cast<std::size_t>(i)])) bs.push_back(i);
    if (s.contains(c_all[static_cast<std::size_t>(i)])) cs.push_back(i);
  }
  d.dimA = a ? 1 : 0;
  d.dimB = static_cast<int>(bs.size());
  d.dimC = static_cast<int>(cs.size());
  d.dimD = dd ? 1 : 0;

  d.beta = Eigen::MatrixXi::Zero(d.dimB, d.dimA);
  if (a) d.beta.setOnes();
  d.alpha = Eigen::MatrixXi::Zero(d.dimD, d.dimC);
  if (dd) d.alpha.setOnes();
  d.gamma = Eigen::MatrixXi::Zero(d.dimC, d.dimB);
  for (int r = 0; r < d.dimC; ++r) {
    for (int c = 0; c < d.dimB; ++c) d.gamma(r, c) = sign[cs[static_cast<std::size_t>(r)]][bs[static_cast<std::size_t>(c)]];
  }

  d.rank_alpha = exact_rank(d.alpha);
  d.rank_beta = exact_rank(d.beta);
  d.rank_gamma = exact_rank(d.gamma);
  d.k1 = (d.dimB - d.rank_gamma) - d.rank_beta;
  d.k2 = d.rank_gamma;
  d.k3 = (d.dimC - d.rank_alpha) - d.rank_gamma;
  return d;
}

std::vector<Subrep> subrep_bruteforce(const DegreeSet& s, std::size_t cap) {
  const std::size_t n = s.size();
  if (n > cap || n > 30) {
    throw Error(ErrorCode::TooLarge, "brute force needs at most " + std::to_string(cap) + " points",
                std::to_string(n));
  }
  const std::vector<Weight> pts(s.points.begin(), s.points.end());
  std::map<Weight, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[pts[i]] = i;
  std::vector<std::uint32_t> succ(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (auto k : kAllKinds) {
      if (auto w = arrow_action(s, k, pts[i])) succ[i] |= std::uint32_t{1} << index.at(*w);
    }
  }
  std::vector<Subrep> out;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    bool closed = true;
    for (std::size_t i = 0; i < n && closed; ++i) {
      if ((mask >> i) & 1U) closed = (succ[i] & ~mask) == 0;
    }
    if (!closed) continue;
    Subrep r;
    r.dims.assign(static_cast<std::size_t>(s.params.N), 0);
    for (std::size_t i = 0; i < n; ++i) {
      if ((mask >> i) & 1U) {
        r.points.insert(pts[i]);
        ++r.dims[static_cast<std::size_t>(s.vertex_of(pts[i]) - 1)];
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

LaurentPoly f_polynomial_oracle(const DegreeSet& s, std::size_t cap) {
  LaurentPoly f(s.params.N);
  for (const auto& r : subrep_bruteforce(s, cap)) {
    f.add_term(LaurentPoly::Exponents(r.dims.begin(), r.dims.end()), 1);
  }
  return f;
}

}  // namespace galerob
