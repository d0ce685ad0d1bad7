#pragma once

#include <algorithm>
#include <bitset>
#include <functional>
#include <numeric>
#include <unordered_map>
#include <vector>

#include "atoms.hpp"

namespace zs {

inline constexpr int kMaxLength = 256;
using LenSet = std::bitset<kMaxLength>;

inline std::vector<int> lengths_of(const LenSet& s) {
  std::vector<int> v;
  for (int i = 0; i < kMaxLength; ++i)
    if (s[i]) v.push_back(i);
  return v;
}

// Factorization: atom indices in ascending order, with repetition.
using Factorization = std::vector<int>;

// Factorizations and length sets over a fixed atom list.
class Factorizer {
 public:
  Factorizer(GroupPtr g, std::vector<Counts> atoms) : g_(std::move(g)), atoms_(std::move(atoms)) {
    const int m = g_->order();
    bucket_.assign(m, {});
    minel_.resize(atoms_.size());
    for (int i = 0; i < int(atoms_.size()); ++i) {
      int p = 0;
      while (p < m && atoms_[i][p] == 0) ++p;
      minel_[i] = p;
      if (p < m) bucket_[p].push_back(i);
    }
    order_.resize(atoms_.size());
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return minel_[a] < minel_[b]; });
  }
  explicit Factorizer(const AtomSet& a) : Factorizer(a.group, a.atoms) {}

  const std::vector<Counts>& atoms() const { return atoms_; }
  const GroupPtr& group() const { return g_; }

  // All factorizations, sorted by atom index vector. Throws past `limit`.
  std::vector<Factorization> factorizations(const Counts& a, std::size_t limit = 1000000) const {
    std::vector<Factorization> out;
    Factorization cur;
    Counts rem = a;
    std::function<void(std::size_t)> rec = [&](std::size_t pos) {
      int p = first_nonzero(rem);
      if (p < 0) {
        Factorization f = cur;
        std::sort(f.begin(), f.end());
        out.push_back(std::move(f));
        require(out.size() <= limit, "resource-limit", "factorization count limit exceeded");
        return;
      }
      if (pos == order_.size()) return;
      int i = order_[pos];
      if (minel_[i] > p) return;
      if (minel_[i] < p || !leq(atoms_[i], rem)) {
        rec(pos + 1);
        return;
      }
      int c = 0;
      while (leq(atoms_[i], rem)) {
        rem = sub(rem, atoms_[i]);
        cur.push_back(i);
        ++c;
      }
      for (; c >= 0; --c) {
        rec(pos + 1);
        if (c > 0) {
          rem = add(rem, atoms_[i]);
          cur.pop_back();
        }
      }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
  }

  LenSet lengths(const Counts& a) {
    require(total(a) < kMaxLength, "resource-limit", "element too long for length sets");
    Counts w = a;
    return lens(w);
  }

  int max_length(const Counts& a) {
    Counts w = a;
    return maxlen(w);
  }

  std::size_t memo_size() const { return memo_.size(); }
  void clear_memo() {
    memo_.clear();
    maxmemo_.clear();
  }

 private:
  static int first_nonzero(const Counts& c) {
    for (int i = 0; i < int(c.size()); ++i)
      if (c[i]) return i;
    return -1;
  }

  LenSet lens(Counts& v) {
    int p = first_nonzero(v);
    LenSet out;
    if (p < 0) {
      out.set(0);
      return out;
    }
    auto it = memo_.find(v);
    if (it != memo_.end()) return it->second;
    for (int i : bucket_[p]) {
      if (!leq(atoms_[i], v)) continue;
      for (std::size_t e = 0; e < v.size(); ++e) v[e] -= atoms_[i][e];
      out |= lens(v) << 1;
      for (std::size_t e = 0; e < v.size(); ++e) v[e] += atoms_[i][e];
    }
    memo_.emplace(v, out);
    return out;
  }

  // -1 when v has no factorization.
  int maxlen(Counts& v) {
    int p = first_nonzero(v);
    if (p < 0) return 0;
    auto it = maxmemo_.find(v);
    if (it != maxmemo_.end()) return it->second;
    int best = -1;
    for (int i : bucket_[p]) {
      if (!leq(atoms_[i], v)) continue;
      for (std::size_t e = 0; e < v.size(); ++e) v[e] -= atoms_[i][e];
      int r = maxlen(v);
      for (std::size_t e = 0; e < v.size(); ++e) v[e] += atoms_[i][e];
      if (r >= 0) best = std::max(best, r + 1);
    }
    maxmemo_.emplace(v, best);
    return best;
  }

  GroupPtr g_;
  std::vector<Counts> atoms_;
  std::vector<std::vector<int>> bucket_;
  std::vector<int> minel_;
  std::vector<int> order_;
  std::unordered_map<Counts, LenSet, CountsHash> memo_;
  std::unordered_map<Counts, int, CountsHash> maxmemo_;
};

struct LengthSetInfo {
  std::vector<int> L;
  std::vector<int> delta;  // distinct successive gaps
  Rational rho{1};
};

inline LengthSetInfo length_set_info(const std::vector<int>& L) {
  LengthSetInfo r;
  r.L = L;
  for (std::size_t i = 1; i < L.size(); ++i) r.delta.push_back(L[i] - L[i - 1]);
  std::sort(r.delta.begin(), r.delta.end());
  r.delta.erase(std::unique(r.delta.begin(), r.delta.end()), r.delta.end());
  if (!L.empty() && L.front() > 0) r.rho = Rational(L.back(), L.front());
  return r;
}

// Residual sizes after removing the common part of two factorizations.
inline int factorization_distance(const Factorization& z, const Factorization& w) {
  std::size_t i = 0, j = 0;
  int common = 0;
  while (i < z.size() && j < w.size()) {
    if (z[i] == w[j]) ++common, ++i, ++j;
    else if (z[i] < w[j]) ++i;
    else ++j;
  }
  return std::max(int(z.size()) - common, int(w.size()) - common);
}

// Smallest N linking all factorizations by steps of distance <= N; 0 if unique.
inline int catenary_degree(const std::vector<Factorization>& z) {
  const int m = int(z.size());
  if (m <= 1) return 0;
  struct Edge {
    int d, a, b;
  };
  std::vector<Edge> edges;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) edges.push_back({factorization_distance(z[a], z[b]), a, b});
  std::sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) { return x.d < y.d; });
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  int comps = m, bottleneck = 0;
  for (const auto& e : edges) {
    int ra = find(e.a), rb = find(e.b);
    if (ra == rb) continue;
    parent[ra] = rb;
    bottleneck = e.d;
    if (--comps == 1) break;
  }
  return bottleneck;
}

// Atoms over supp(a), enough to factor a.
inline AtomSet atoms_for(const Sequence& a) {
  auto supp = a.support();
  int bound = generated_subgroup(a.group(), supp).order();
  return enumerate_atoms(a.group_ptr(), supp, std::max(bound, 1));
}

}  // namespace zs
