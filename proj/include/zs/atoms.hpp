#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <unordered_set>
#include <utility>
#include <vector>

#include "product.hpp"

namespace zs {

struct AtomSet {
  GroupPtr group;
  std::vector<int> subset;  // G_0, sorted
  int max_len = 0;
  std::vector<Counts> atoms;  // canonical: by length, then counts ascending
  bool certified_complete = false;

  std::vector<Sequence> sequences() const {
    std::vector<Sequence> v;
    for (const auto& a : atoms) v.emplace_back(group, a);
    return v;
  }
  int index_of(const Counts& c) const {
    for (int i = 0; i < int(atoms.size()); ++i)
      if (atoms[i] == c) return i;
    return -1;
  }
  int max_length() const {
    int m = 0;
    for (const auto& a : atoms) m = std::max(m, total(a));
    return m;
  }
};

inline bool canonical_less(const Counts& a, const Counts& b) {
  int la = total(a), lb = total(b);
  if (la != lb) return la < lb;
  return a < b;
}

// Finds T with 0 < T < S, T and S - T product-one; S must be product-one.
inline std::optional<std::pair<Counts, Counts>> find_split(const Counts& s, ProductOne& in_b) {
  const int len = total(s);
  if (len < 2) return std::nullopt;
  Counts t(s.size(), 0);
  std::optional<std::pair<Counts, Counts>> found;
  // |T| <= |S|/2 suffices: the shorter half of any split works.
  std::function<bool(int, int)> rec = [&](int e, int k) -> bool {
    if (e == int(s.size())) {
      if (k == 0) return false;
      if (!in_b(t)) return false;
      Counts r = sub(s, t);
      if (!in_b(r)) return false;
      found = std::make_pair(t, r);
      return true;
    }
    for (int c = 0; c <= s[e] && k + c <= len / 2; ++c) {
      t[e] = c;
      if (rec(e + 1, k + c)) return true;
    }
    t[e] = 0;
    return false;
  };
  rec(0, 0);
  return found;
}

inline bool is_atom(const Counts& s, ProductOne& in_b) {
  if (total(s) == 0 || !in_b(s)) return false;
  return !find_split(s, in_b).has_value();
}

inline bool is_atom(const Sequence& s) {
  ProductOne in_b(s.group_ptr());
  return is_atom(s.counts(), in_b);
}

// Graded enumeration of A(G_0) up to max_len. A product-one U is an atom iff
// no shorter atom A with |A| <= |U|/2 leaves a product-one remainder.
inline AtomSet enumerate_atoms(GroupPtr g, std::vector<int> subset, int max_len) {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  const Group& G = *g;
  ProductOne in_b(g);
  AtomSet out;
  out.group = g;
  out.subset = subset;
  out.max_len = max_len;
  const int m = int(subset.size());
  const int id = G.identity();
  std::vector<std::vector<Counts>> by_len(max_len + 1);
  std::vector<std::pair<int, int>> inverse_pairs;  // (g, g^-1) both in G_0, g <= g^-1
  for (int a : subset)
    if (a != id && a <= G.inv(a) &&
        std::binary_search(subset.begin(), subset.end(), G.inv(a)))
      inverse_pairs.emplace_back(a, G.inv(a));

  Counts u(G.order(), 0);
  auto decomposable = [&](int len) {
    for (auto [a, b] : inverse_pairs) {
      if (u[a] < 1 + (a == b) || u[b] < 1) continue;
      if (len == 2) continue;
      --u[a], --u[b];
      bool ok = in_b(u);
      ++u[a], ++u[b];
      if (ok) return true;
    }
    for (int l = 1; 2 * l <= len; ++l)
      for (const auto& a : by_len[l]) {
        if (!leq(a, u)) continue;
        Counts r = sub(u, a);
        if (in_b(r)) return true;
      }
    return false;
  };
  std::function<void(int, int, int)> rec = [&](int pos, int left, int len) {
    if (left == 0) {
      if (in_b(u) && !decomposable(len)) by_len[len].push_back(u);
      return;
    }
    if (pos == m) return;
    int e = subset[pos];
    int hi = left;
    if (e == id) hi = len == 1 ? 1 : 0;
    for (int c = hi; c >= 0; --c) {
      u[e] = c;
      if (pos + 1 < m || c == left) rec(pos + 1, left - c, len);
    }
    u[e] = 0;
  };
  for (int len = 1; len <= max_len; ++len) {
    rec(0, len, len);
    std::sort(by_len[len].begin(), by_len[len].end());
    for (const auto& a : by_len[len]) out.atoms.push_back(a);
  }
  // D(G_0) <= |<G_0>| bounds every atom length.
  out.certified_complete = max_len >= generated_subgroup(G, subset).order();
  return out;
}

inline AtomSet enumerate_atoms(const Group& G, GroupPtr g, int max_len) {
  std::vector<int> all(G.order());
  for (int e = 0; e < G.order(); ++e) all[e] = e;
  return enumerate_atoms(std::move(g), all, max_len);
}

}  // namespace zs
