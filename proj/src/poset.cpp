#include <future>
#include <unordered_map>

#include "galerob/degreeset.hpp"
#include "galerob/error.hpp"

namespace galerob {

namespace {

struct MaskHash {
  std::size_t operator()(const Poset::Mask& m) const noexcept {
    std::size_t h = 0x84222325cbf29ce4ULL;
    for (auto w : m) h = (h ^ w) * 0x100000001b3ULL;
    return h;
  }
};

bool subset_of(const Poset::Mask& x, const Poset::Mask& y) {
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k] & ~y[k]) return false;
  }
  return true;
}

bool is_empty(const Poset::Mask& m) {
  for (auto w : m) {
    if (w) return false;
  }
  return true;
}

Poset::Mask minus(Poset::Mask x, const Poset::Mask& y) {
  for (std::size_t k = 0; k < x.size(); ++k) x[k] &= ~y[k];
  return x;
}

Poset::Mask intersect(Poset::Mask x, const Poset::Mask& y) {
  for (std::size_t k = 0; k < x.size(); ++k) x[k] &= y[k];
  return x;
}

// The element of m sitting in the middle of the linear extension; splitting
// there keeps both branches of the recursion comparable in size.
std::size_t pivot(const Poset::Mask& m) {
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k < m.size(); ++k) {
    for (auto w = m[k]; w; w &= w - 1) idx.push_back(k * 64 + static_cast<std::size_t>(__builtin_ctzll(w)));
  }
  return idx[idx.size() / 2];
}

// Sums a value over all ideals (take = down sets, skip = up sets) or all
// filters (the other way round) of a subposet, memoized on the subset.
template <typename Value, typename Leaf, typename Extend>
class SplitSum {
 public:
  SplitSum(const std::vector<Poset::Mask>& take, const std::vector<Poset::Mask>& skip, Leaf leaf, Extend extend)
      : take_(take), skip_(skip), leaf_(leaf), extend_(extend) {}

  Value operator()(const Poset::Mask& p) {
    if (is_empty(p)) return leaf_();
    if (auto it = memo_.find(p); it != memo_.end()) return it->second;
    const std::size_t x = pivot(p);
    Value without = (*this)(minus(p, skip_[x]));
    Value with = (*this)(minus(p, take_[x]));
    Value total = without + extend_(intersect(p, take_[x]), with);
    memo_.emplace(p, total);
    return total;
  }

 private:
  const std::vector<Poset::Mask>& take_;
  const std::vector<Poset::Mask>& skip_;
  Leaf leaf_;
  Extend extend_;
  std::unordered_map<Poset::Mask, Value, MaskHash> memo_;
};

}  // namespace

Poset::Poset(std::vector<Weight> elements) : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  const std::size_t n = elements_.size();
  words_ = (n + 63) / 64;
  up_.assign(n, Mask(words_, 0));
  down_.assign(n, Mask(words_, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (leq(elements_[i], elements_[j])) {
        set(up_[i], j);
        set(down_[j], i);
      }
    }
  }
}

Poset::Mask Poset::full_mask() const {
  Mask m = empty_mask();
  for (std::size_t i = 0; i < size(); ++i) set(m, i);
  return m;
}

std::vector<Weight> Poset::members(const Mask& m) const {
  std::vector<Weight> out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (test(m, i)) out.push_back(elements_[i]);
  }
  return out;
}

void Poset::for_each_ideal(const std::function<void(const Mask&)>& f) const {
  Mask cur = empty_mask();
  // lex order is a linear extension, so everything below i is decided first
  std::function<void(std::size_t)> dfs = [&](std::size_t i) {
    if (i == size()) {
      f(cur);
      return;
    }
    dfs(i + 1);
    Mask below = down_[i];
    below[i / 64] &= ~(std::uint64_t{1} << (i % 64));
    if (subset_of(below, cur)) {
      set(cur, i);
      dfs(i + 1);
      cur[i / 64] &= ~(std::uint64_t{1} << (i % 64));
    }
  };
  dfs(0);
}

void Poset::for_each_filter(const std::function<void(const Mask&)>& f) const {
  Mask cur = empty_mask();
  std::function<void(std::size_t)> dfs = [&](std::size_t r) {
    if (r == 0) {
      f(cur);
      return;
    }
    const std::size_t i = r - 1;
    dfs(r - 1);
    Mask above = up_[i];
    above[i / 64] &= ~(std::uint64_t{1} << (i % 64));
    if (subset_of(above, cur)) {
      set(cur, i);
      dfs(r - 1);
      cur[i / 64] &= ~(std::uint64_t{1} << (i % 64));
    }
  };
  dfs(size());
}

mpz_class Poset::count_ideals() const {
  auto leaf = [] { return mpz_class(1); };
  auto extend = [](const Mask&, const mpz_class& v) { return v; };
  SplitSum<mpz_class, decltype(leaf), decltype(extend)> count(down_, up_, leaf, extend);
  return count(full_mask());
}

LaurentPoly f_polynomial(const DegreeSet& s, Side side, int threads) {
  const int N = s.params.N;
  const Poset p(s);
  std::vector<int> var(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Weight& w = p.elements()[i];
    if (!s.in_band(w)) throw Error(ErrorCode::InvalidDegreeSet, "point outside the band", to_string(w));
    const auto l = level(s.params, w);
    var[i] = static_cast<int>(side == Side::Filters ? l - s.t : s.t + N + 1 - l);
  }
  auto leaf = [N] { return LaurentPoly::constant(N, 1); };
  auto extend = [&](const Poset::Mask& m, const LaurentPoly& v) {
    LaurentPoly::Exponents e(static_cast<std::size_t>(N), 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (Poset::test(m, i)) ++e[static_cast<std::size_t>(var[i] - 1)];
    }
    return LaurentPoly::monomial(std::move(e)) * v;
  };
  std::vector<Poset::Mask> downs, ups;
  for (std::size_t i = 0; i < p.size(); ++i) {
    downs.push_back(p.down(i));
    ups.push_back(p.up(i));
  }
  const auto& take = side == Side::Ideals ? downs : ups;
  const auto& skip = side == Side::Ideals ? ups : downs;
  using Sum = SplitSum<LaurentPoly, decltype(leaf), decltype(extend)>;

  const Poset::Mask all = p.full_mask();
  if (threads <= 1 || p.size() < 2) {
    Sum sum(take, skip, leaf, extend);
    return sum(all);
  }
  // Two independent branches, each with its own memo; the reduction order
  // is fixed so the result does not depend on scheduling.
  const std::size_t x = pivot(all);
  auto branch = [&](const Poset::Mask& m) {
    Sum sum(take, skip, leaf, extend);
    return sum(m);
  };
  auto without = std::async(std::launch::async, branch, minus(all, skip[x]));
  LaurentPoly with = branch(minus(all, take[x]));
  return without.get() + extend(intersect(all, take[x]), with);
}

}  // namespace galerob
