#pragma once

// Slow reference implementations. Nothing here calls the engine beyond the
// group's multiplication table.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "zs/group.hpp"
#include "zs/sequence.hpp"

namespace oracle {

using zs::Counts;
using zs::Group;

inline std::vector<int> expand(const Counts& c) {
  std::vector<int> t;
  for (int e = 0; e < int(c.size()); ++e)
    for (int k = 0; k < c[e]; ++k) t.push_back(e);
  return t;
}

// products over every ordering
inline std::set<int> pi(const Group& G, const Counts& c) {
  std::vector<int> t = expand(c);
  std::set<int> out;
  do {
    int p = G.identity();
    for (int e : t) p = G.mul(p, e);
    out.insert(p);
  } while (std::next_permutation(t.begin(), t.end()));
  return out;
}

inline bool product_one(const Group& G, const Counts& c) { return pi(G, c).count(G.identity()) > 0; }

// Calls f on every count vector t <= c (including 0 and c).
template <class F>
void for_each_sub(const Counts& c, F&& f) {
  Counts t(c.size(), 0);
  while (true) {
    f(t);
    std::size_t i = 0;
    while (i < c.size() && t[i] == c[i]) t[i++] = 0;
    if (i == c.size()) return;
    ++t[i];
  }
}

inline Counts minus(Counts a, const Counts& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

inline int len(const Counts& c) { return std::accumulate(c.begin(), c.end(), 0); }

// S in B(G) is an atom iff no split S = T (S - T) into two nonempty product-one parts.
inline bool is_atom(const Group& G, const Counts& s) {
  if (len(s) == 0 || !product_one(G, s)) return false;
  bool split = false;
  for_each_sub(s, [&](const Counts& t) {
    if (split) return;
    int l = len(t);
    if (l == 0 || l == len(s)) return;
    if (product_one(G, t) && product_one(G, minus(s, t))) split = true;
  });
  return !split;
}

inline std::set<Counts> atoms(const Group& G, const std::vector<int>& subset, int max_len) {
  std::set<Counts> out;
  Counts c(G.order(), 0);
  auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
    if (pos == subset.size()) {
      if (is_atom(G, c)) out.insert(c);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      c[subset[pos]] = k;
      self(self, pos + 1, left - k);
    }
    c[subset[pos]] = 0;
  };
  rec(rec, 0, max_len);
  return out;
}

// L(S) by peeling off atoms, memoized.
class Lengths {
 public:
  Lengths(const Group& G, std::set<Counts> atoms) : G_(G), atoms_(atoms.begin(), atoms.end()) {}

  bool in_b(const Counts& s) {
    auto it = b_.find(s);
    if (it != b_.end()) return it->second;
    return b_[s] = product_one(G_, s);
  }

  std::set<int> operator()(const Counts& s) {
    if (len(s) == 0) return {0};
    auto it = memo_.find(s);
    if (it != memo_.end()) return it->second;
    std::set<int> out;
    for (const auto& a : atoms_) {
      bool fits = true;
      for (std::size_t i = 0; i < s.size(); ++i) fits = fits && a[i] <= s[i];
      if (!fits) continue;
      Counts r = minus(s, a);
      if (len(r) && !in_b(r)) continue;
      for (int l : (*this)(r)) out.insert(l + 1);
    }
    memo_[s] = out;
    return out;
  }

 private:
  const Group& G_;
  std::vector<Counts> atoms_;
  std::map<Counts, std::set<int>> memo_;
  std::map<Counts, bool> b_;
};

// min Delta({g^u, g^v}) in C_n from sets of lengths of every product-one
// x u + y v with x + y <= bound.
inline long long min_delta_two(int n, int u, int v, int bound) {
  auto in_b = [&](int x, int y) { return (x * (long long)u + y * (long long)v) % n == 0; };
  std::vector<std::pair<int, int>> at;
  for (int x = 0; x <= n; ++x)
    for (int y = 0; y <= n; ++y) {
      if (x + y == 0 || !in_b(x, y)) continue;
      bool atom = true;
      for (int p = 0; p <= x && atom; ++p)
        for (int q = 0; q <= y && atom; ++q)
          if (p + q > 0 && p + q < x + y && in_b(p, q)) atom = false;
      if (atom) at.push_back({x, y});
    }
  std::map<std::pair<int, int>, std::set<int>> L;
  L[{0, 0}] = {0};
  long long g = 0;
  for (int s = 1; s <= bound; ++s)
    for (int x = 0; x <= s; ++x) {
      int y = s - x;
      if (!in_b(x, y)) continue;
      std::set<int> out;
      for (auto [p, q] : at)
        if (p <= x && q <= y && in_b(x - p, y - q))
          for (int l : L[{x - p, y - q}]) out.insert(l + 1);
      int prev = -1;
      for (int l : out) {
        if (prev >= 0) g = std::gcd(g, (long long)(l - prev));
        prev = l;
      }
      L[{x, y}] = out;
    }
  return g;
}

}  // namespace oracle
