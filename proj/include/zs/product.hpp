#pragma once

#include <bitset>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "sequence.hpp"
#include "zset.hpp"

namespace zs {

inline constexpr int kMaxOrder = 128;
using ElemSet = std::bitset<kMaxOrder>;

inline std::vector<int> elements_of(const ElemSet& s, int order) {
  std::vector<int> v;
  for (int e = 0; e < order; ++e)
    if (s[e]) v.push_back(e);
  return v;
}

inline constexpr int kDefaultPiCap = 12;

// pi(S) by dynamic programming over sub-multisets:
// f(empty) = {1}, f(M) = { p*g : g in supp(M), p in f(M - g) }.
class PiOracle {
 public:
  explicit PiOracle(GroupPtr g, int cap = kDefaultPiCap) : g_(std::move(g)), cap_(cap) {
    require(g_->order() <= kMaxOrder, "resource-limit", "group order above set capacity");
  }

  ElemSet operator()(const Counts& c) {
    require(total(c) <= cap_, "resource-limit",
            "pi brute force cap " + std::to_string(cap_) + " exceeded");
    Counts work = c;
    return eval(work);
  }

  int cap() const { return cap_; }

 private:
  ElemSet eval(Counts& c) {
    auto it = memo_.find(c);
    if (it != memo_.end()) return it->second;
    ElemSet out;
    bool any = false;
    for (int g = 0; g < int(c.size()); ++g) {
      if (!c[g]) continue;
      any = true;
      --c[g];
      ElemSet prev = eval(c);
      ++c[g];
      for (int p = 0; p < g_->order(); ++p)
        if (prev[p]) out.set(g_->mul(p, g));
    }
    if (!any) out.set(g_->identity());
    memo_.emplace(c, out);
    return out;
  }

  GroupPtr g_;
  int cap_;
  std::unordered_map<Counts, ElemSet, CountsHash> memo_;
};

inline ElemSet pi_bruteforce(const Sequence& s, int cap = kDefaultPiCap) {
  PiOracle o(s.group_ptr(), cap);
  return o(s.counts());
}

namespace detail {

// {(c-2j)x : j in [0,c]} mod n
inline std::uint64_t pm_bits(int x, int c, int n) {
  std::uint64_t m = 0;
  int steps = std::min(c, 2 * n);
  for (int j = 0; j <= steps; ++j) {
    long long v = ((long long)(c - 2 * j) * x) % n;
    if (v < 0) v += n;
    m |= 1ULL << v;
  }
  return m;
}

// X = {+-x_1} + ... + {+-x_s} over rotation counts rc[0..n-1].
inline std::uint64_t rotation_x(const int* rc, int n) {
  std::uint64_t m = 1;
  for (int x = 1; x < n; ++x)
    if (rc[x]) m = sumset_bits(m, pm_bits(x, rc[x], n), n);
  return m;
}

inline int rotation_sigma(const int* rc, int n) {
  long long s = 0;
  for (int x = 1; x < n; ++x) s += (long long)x * rc[x];
  return int(s % n);
}

// Y = sigma(R) - Sigma_h(2R), h = floor(l/2), over reflection counts.
inline std::uint64_t reflection_y(const int* yc, int n) {
  int l = 0;
  long long sig = 0;
  for (int y = 0; y < n; ++y) l += yc[y], sig += (long long)y * yc[y];
  int h = l / 2;
  std::vector<std::uint64_t> dp(h + 1, 0);
  dp[0] = 1;
  for (int y = 0; y < n; ++y) {
    if (!yc[y]) continue;
    std::vector<std::uint64_t> nd(h + 1, 0);
    for (int k = 0; k <= h; ++k) {
      if (!dp[k]) continue;
      for (int c = 0; c <= yc[y] && k + c <= h; ++c)
        nd[k + c] |= ZSet::rotl(dp[k], int((2LL * y * c) % n), n);
    }
    dp.swap(nd);
  }
  std::uint64_t s = dp[h], out = 0;
  int sg = int(sig % n);
  for (int v = 0; v < n; ++v)
    if (s >> v & 1) out |= 1ULL << (((sg - v) % n + n) % n);
  return out;
}

inline std::uint64_t neg_bits(std::uint64_t m, int n) {
  std::uint64_t r = 0;
  for (int v = 0; v < n; ++v)
    if (m >> v & 1) r |= 1ULL << ((n - v) % n);
  return r;
}

}  // namespace detail

// pi(S) for dihedral groups via the signed sumset formula; no length cap.
inline ElemSet pi_dihedral(const Sequence& s) {
  const Group& G = s.group();
  require(G.is_dihedral(), "unsupported-presentation", "pi_dihedral needs a dihedral group");
  const int n = G.n();
  require(n <= 64, "resource-limit", "pi_dihedral supports n <= 64");
  const int* rc = s.counts().data();
  const int* yc = rc + n;
  int l = 0;
  for (int y = 0; y < n; ++y) l += yc[y];
  ElemSet out;
  if (l == 0) {
    out.set(G.rot(detail::rotation_sigma(rc, n)));
    return out;
  }
  std::uint64_t z = sumset_bits(detail::rotation_x(rc, n), detail::reflection_y(yc, n), n);
  for (int v = 0; v < n; ++v)
    if (z >> v & 1) out.set((l % 2) * n + v);
  return out;
}

inline ElemSet pi(const Sequence& s, int cap = kDefaultPiCap) {
  if (s.group().is_dihedral() && s.group().n() <= 64) return pi_dihedral(s);
  if (s.group().is_cyclic()) {
    ElemSet out;
    long long t = 0;
    for (int e = 0; e < s.group().order(); ++e) t += (long long)e * s.count(e);
    out.set(int(t % s.group().order()));
    return out;
  }
  return pi_bruteforce(s, cap);
}

// Membership test for B(G) on count vectors, with per-instance caches.
// Instances are not thread safe; use one per worker.
class ProductOne {
 public:
  explicit ProductOne(GroupPtr g, int generic_cap = 24) : g_(std::move(g)), pi_(g_, generic_cap) {
    if (g_->is_dihedral()) require(g_->n() <= 64, "resource-limit", "dihedral fast path needs n <= 64");
  }

  bool operator()(const Counts& c) {
    const Group& G = *g_;
    if (G.is_cyclic()) {
      long long t = 0;
      for (int e = 1; e < G.order(); ++e) t += (long long)e * c[e];
      return t % G.order() == 0;
    }
    if (G.is_dihedral()) {
      const int n = G.n();
      int l = 0;
      for (int y = 0; y < n; ++y) l += c[n + y];
      if (l & 1) return false;
      if (l == 0) return detail::rotation_sigma(c.data(), n) == 0;
      std::uint64_t x = detail::rotation_x(c.data(), n);
      std::uint64_t y = reflection_y_cached(c.data() + n, n);
      return (x & detail::neg_bits(y, n)) != 0;
    }
    return pi_(c)[G.identity()];
  }

  bool operator()(const Sequence& s) { return (*this)(s.counts()); }

  const GroupPtr& group() const { return g_; }

  std::uint64_t reflection_y_cached(const int* yc, int n) {
    key_.assign(std::size_t(n), 0);
    for (int y = 0; y < n; ++y) key_[y] = char16_t(yc[y]);
    auto it = ymemo_.find(key_);
    if (it != ymemo_.end()) return it->second;
    std::uint64_t v = detail::reflection_y(yc, n);
    ymemo_.emplace(key_, v);
    return v;
  }

 private:
  GroupPtr g_;
  PiOracle pi_;
  std::u16string key_;
  std::unordered_map<std::u16string, std::uint64_t> ymemo_;
};

struct ProductOneStatus {
  bool is_product_one = false;
  bool is_product_one_free = false;
};

// Pi_m(S) (m > 0) or Pi(S) (m = 0): products of nonempty subsequences.
inline ElemSet subproducts(const Sequence& s, int m = 0, int cap = kDefaultPiCap) {
  require(s.length() <= cap || s.group().is_dihedral() || s.group().is_cyclic(), "resource-limit",
          "subproducts cap exceeded");
  const Counts& c = s.counts();
  Counts t(c.size(), 0);
  ElemSet out;
  std::function<void(int, int)> rec = [&](int e, int len) {
    if (e == int(c.size())) {
      if (len == 0 || (m > 0 && len != m)) return;
      out |= pi(Sequence(s.group_ptr(), t), cap);
      return;
    }
    for (int k = 0; k <= c[e]; ++k) {
      if (m > 0 && len + k > m) break;
      t[e] = k;
      rec(e + 1, len + k);
    }
    t[e] = 0;
  };
  rec(0, 0);
  return out;
}

inline ProductOneStatus product_one_status(const Sequence& s, int cap = kDefaultPiCap) {
  ProductOneStatus st;
  int id = s.group().identity();
  st.is_product_one = pi(s, cap)[id];
  st.is_product_one_free = !subproducts(s, 0, cap)[id];
  return st;
}

// pi(S) is contained in the commutator subgroup.
inline bool in_complete_integral_closure(const Sequence& s, const Subgroup& commutator,
                                         int cap = kDefaultPiCap) {
  ElemSet p = pi(s, cap);
  for (int e = 0; e < s.group().order(); ++e)
    if (p[e] && !commutator.contains(e)) return false;
  return true;
}

}  // namespace zs
