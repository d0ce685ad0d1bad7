#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <unordered_set>
#include <vector>

#include "factor.hpp"

namespace zs {

// Element permutations preserving B(G): automorphisms and, composed with them,
// inversion (pi(S^-1) = pi(S)^-1).
inline std::vector<std::vector<int>> symmetry_maps(const Group& G) {
  std::vector<std::vector<int>> maps;
  const int m = G.order();
  std::vector<int> id(m);
  std::iota(id.begin(), id.end(), 0);
  if (G.is_dihedral()) {
    const int n = G.n();
    for (int u = 1; u < n; ++u) {
      if (std::gcd(u, n) != 1) continue;
      for (int b = 0; b < n; ++b) {
        std::vector<int> p(m);
        for (int x = 0; x < n; ++x) {
          p[x] = (u * x) % n;
          p[n + x] = n + (u * x + b) % n;
        }
        maps.push_back(p);
      }
    }
  } else if (G.is_cyclic()) {
    const int n = G.n();
    for (int u = 1; u <= n; ++u) {
      if (std::gcd(u, n) != 1 && n > 1) continue;
      std::vector<int> p(m);
      for (int x = 0; x < n; ++x) p[x] = (u * x) % n;
      maps.push_back(p);
      if (n == 1) break;
    }
  } else {
    maps.push_back(id);
  }
  std::vector<std::vector<int>> all = maps;
  for (const auto& p : maps) {
    std::vector<int> q(m);
    for (int e = 0; e < m; ++e) q[e] = G.inv(p[e]);
    all.push_back(q);
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

inline Counts apply_map(const std::vector<int>& p, const Counts& c) {
  Counts r(c.size(), 0);
  for (std::size_t e = 0; e < c.size(); ++e) r[p[e]] += c[e];
  return r;
}

struct OmegaResult {
  int lower = 0;                 // size of the largest minimal cover found
  std::vector<Counts> witness;   // one such cover (atom count vectors)
  bool exhaustive = false;       // every minimal cover with at most k_cap atoms was examined
  int k_cap = 0;
  long long candidates = 0;      // complements W examined
  std::string note;

  // Exact within the cap: exhaustive and no cover reached the cap.
  bool exact() const { return exhaustive && lower < k_cap; }
};

// Divisibility in B(G): U | P iff U <= P and P - U is product-one.
inline bool b_divides(const Counts& u, const Counts& p, ProductOne& in_b) {
  return leq(u, p) && in_b(sub(p, u));
}

// Shrinks a cover of U to a minimal one by a single removal pass.
inline std::vector<Counts> minimal_subcover(const Counts& u, std::vector<Counts> z, ProductOne& in_b) {
  Counts p(u.size(), 0);
  for (const auto& a : z) p = add(p, a);
  for (std::size_t i = 0; i < z.size();) {
    Counts q = sub(p, z[i]);
    if (b_divides(u, q, in_b)) {
      p = q;
      z.erase(z.begin() + long(i));
    } else {
      ++i;
    }
  }
  return z;
}

// Lower bound from factorizations of U*U and U*U^-1, each shrunk to a
// minimal cover of U.
inline OmegaResult omega_lower_bound(const Sequence& us, ProductOne& in_b) {
  OmegaResult r;
  if (us.empty()) return r;
  for (const Sequence& prod : {us.concat(us), us.concat(us.inverse())}) {
    AtomSet local = atoms_for(prod);
    Factorizer f(local);
    for (const auto& z : f.factorizations(prod.counts(), 200000)) {
      std::vector<Counts> cover;
      for (int i : z) cover.push_back(local.atoms[i]);
      auto mz = minimal_subcover(us.counts(), cover, in_b);
      if (int(mz.size()) > r.lower) r.lower = int(mz.size()), r.witness = mz;
    }
  }
  return r;
}

// z is a minimal cover of u: u divides the product of z but no product
// missing one atom (divisibility is monotone in the cover).
inline bool is_minimal_cover(const Counts& u, const std::vector<Counts>& z, ProductOne& in_b) {
  Counts p(u.size(), 0);
  for (const auto& a : z) p = add(p, a);
  if (!b_divides(u, p, in_b)) return false;
  for (const auto& a : z)
    if (b_divides(u, sub(p, a), in_b)) return false;
  return true;
}

class OmegaSearch {
 public:
  // Budget caps the number of count vectors visited while building candidates.
  OmegaSearch(GroupPtr g, int k_cap, long long budget = 20000000)
      : g_(std::move(g)), in_b_(g_), k_cap_(k_cap), budget_(budget) {
    std::vector<int> all(g_->order());
    std::iota(all.begin(), all.end(), 0);
    atoms_ = enumerate_atoms(g_, all, g_->order());
    D_ = atoms_.max_length();
    for (const auto& a : atoms_.atoms)
      if (!(total(a) == 1 && a[g_->identity()] == 1)) nontrivial_.push_back(a);
    for (const auto& a : nontrivial_) {
      flat_.insert(flat_.end(), a.begin(), a.end());
      lens_.push_back(total(a));
    }
  }

  const AtomSet& atoms() const { return atoms_; }
  int davenport() const { return D_; }

  OmegaResult lower_bound(const Counts& u) {
    OmegaResult r = omega_lower_bound(Sequence(g_, u), in_b_);
    r.k_cap = k_cap_;
    return r;
  }

  // Every minimal cover z with |z| <= k_cap factors P = U*W (W product-one)
  // using only atoms C with C !<= W or W - C not product-one. Either some C has
  // the second property, so W lies in (non-B) + atom, or all are of the first
  // kind and |z| <= |U|.
  OmegaResult exhaustive(const Counts& u) {
    OmegaResult r = lower_bound(u);
    r.k_cap = k_cap_;
    if (total(u) == 0) {
      r.exhaustive = true;
      return r;
    }
    require(is_atom(u, in_b_), "invalid-argument", "omega needs an atom");
    const int ul = total(u);
    const int L = k_cap_ * D_ - ul;
    const int L1 = std::min(L, ul * (D_ - 1));
    if (!build_candidates(L, L1)) {
      r.note = "candidate budget exceeded";
      return r;
    }
    const int m = g_->order(), na = int(nontrivial_.size());
    std::vector<int> p(m), crit;
    std::vector<int> best;
    for (const auto& cd : cand_) {
      const int wl = cd.len;
      if (wl > L) continue;
      if (cd.loose.empty() && (wl > L1 || ul <= r.lower)) continue;
      // every atom has length >= 2
      if ((ul + wl) / 2 <= r.lower) continue;
      ++r.candidates;
      for (int e = 0; e < m; ++e) p[e] = u[e] + cd.w[e];
      crit.clear();
      for (int i = 0; i < na; ++i) {
        bool below_w = cd.below[i >> 6] >> (i & 63) & 1;
        bool loose = below_w && std::binary_search(cd.loose.begin(), cd.loose.end(), i);
        if (loose || (!below_w && leq_flat(i, p.data()))) crit.push_back(i);
      }
      if (longest(p, crit, r.lower, best) > r.lower) {
        r.lower = int(best.size());
        r.witness.clear();
        for (int i : best) r.witness.push_back(nontrivial_[i]);
      }
    }
    r.exhaustive = true;
    return r;
  }

  // omega(G) over orbit representatives of the nontrivial atoms.
  struct GroupOmega {
    int value = 0;
    bool exhaustive = true;
    Counts argmax;
    std::vector<Counts> witness;
    int representatives = 0;
  };

  GroupOmega group_omega() {
    auto maps = symmetry_maps(*g_);
    std::set<Counts> seen;
    GroupOmega out;
    int shortest = D_;
    for (const auto& a : nontrivial_) shortest = std::min(shortest, total(a));
    if (!build_candidates(k_cap_ * D_ - shortest, std::min(k_cap_ * D_ - shortest, D_ * (D_ - 1))))
      out.exhaustive = false;
    for (const auto& a : nontrivial_) {
      if (seen.count(a)) continue;
      for (const auto& p : maps) seen.insert(apply_map(p, a));
      ++out.representatives;
      OmegaResult r = exhaustive(a);
      out.exhaustive = out.exhaustive && r.exhaustive;
      if (r.lower > out.value) out.value = r.lower, out.argmax = a, out.witness = r.witness;
    }
    // The identity atom divides a product only through itself.
    out.value = std::max(out.value, 1);
    return out;
  }

 private:
  struct Candidate {
    Counts w;
    int len = 0;
    std::vector<int> loose;           // atoms C <= W with W - C not product-one
    std::vector<std::uint64_t> below;  // bitmask of atoms C <= W
  };

  bool leq_flat(int i, const int* v) const {
    const int m = g_->order();
    const int* a = flat_.data() + std::size_t(i) * m;
    for (int e = 0; e < m; ++e)
      if (a[e] > v[e]) return false;
    return true;
  }

  // Longest factorization of p over atoms `crit` with at most k_cap atoms;
  // only lengths above `floor` are searched for. Returns -1 if none.
  int longest(const std::vector<int>& p, const std::vector<int>& crit, int floor, std::vector<int>& best) {
    const int m = g_->order();
    std::vector<int> rem = p, cur;
    int remlen = 0;
    for (int x : p) remlen += x;
    int bestlen = -1;
    int target = floor;
    auto rec = [&](auto&& self, std::size_t pos) -> void {
      if (int(cur.size()) > k_cap_) return;
      if (remlen == 0) {
        if (int(cur.size()) > target) bestlen = target = int(cur.size()), best = cur;
        return;
      }
      if (pos == crit.size()) return;
      // crit is sorted by atom length
      if (int(cur.size()) + remlen / lens_[crit[pos]] <= target) return;
      int first = 0;
      while (rem[first] == 0) ++first;
      bool coverable = false;
      for (std::size_t j = pos; j < crit.size() && !coverable; ++j)
        coverable = flat_[std::size_t(crit[j]) * m + first] > 0 && leq_flat(crit[j], rem.data());
      if (!coverable) return;
      const int i = crit[pos];
      const int* c = flat_.data() + std::size_t(i) * m;
      const int cl = lens_[i];
      int k = 0;
      while (leq_flat(i, rem.data()) && int(cur.size()) <= k_cap_) {
        for (int e = 0; e < m; ++e) rem[e] -= c[e];
        remlen -= cl;
        cur.push_back(i);
        ++k;
      }
      for (; k >= 0; --k) {
        self(self, pos + 1);
        if (k > 0) {
          for (int e = 0; e < m; ++e) rem[e] += c[e];
          remlen += cl;
          cur.pop_back();
        }
      }
    };
    rec(rec, 0);
    return bestlen;
  }

  // Candidate complements: product-one W with |W| <= L1, plus product-one
  // W = N + C (N not product-one, C an atom) with |W| <= L.
  bool build_candidates(int L, int L1) {
    if (built_L_ >= L && built_L1_ >= L1) return true;
    std::unordered_set<Counts, CountsHash> set;
    long long visited = 0;
    const int m = g_->order();
    Counts c(m, 0);
    std::function<bool(int, int, int)> all_b = [&](int e, int len, int cap) -> bool {
      if (e == m) {
        if (++visited > budget_) return false;
        if (in_b_(c)) set.insert(c);
        return true;
      }
      for (int k = 0; len + k <= cap; ++k) {
        c[e] = k;
        if (!all_b(e + 1, len + k, cap)) return false;
      }
      c[e] = 0;
      return true;
    };
    if (!all_b(0, 0, L1)) return false;
    std::vector<Counts> nonb;
    if (!enumerate_non_b(L - 1, nonb, visited)) return false;
    Counts w(m);
    for (const auto& nb : nonb) {
      const int nl = total(nb);
      for (int i = 0; i < int(nontrivial_.size()); ++i) {
        if (nl + lens_[i] > L) continue;
        for (int e = 0; e < m; ++e) w[e] = nb[e] + nontrivial_[i][e];
        if (in_b_(w)) set.insert(w);
      }
    }
    std::vector<Counts> ws(set.begin(), set.end());
    std::sort(ws.begin(), ws.end(), canonical_less);
    cand_.clear();
    const int na = int(nontrivial_.size());
    Counts scratch(m);
    for (auto& w : ws) {
      Candidate cd;
      cd.w = std::move(w);
      cd.len = total(cd.w);
      cd.below.assign(std::size_t((na + 63) / 64), 0);
      for (int i = 0; i < na; ++i) {
        if (!leq_flat(i, cd.w.data())) continue;
        cd.below[i >> 6] |= 1ULL << (i & 63);
        for (int e = 0; e < m; ++e) scratch[e] = cd.w[e] - nontrivial_[i][e];
        if (!in_b_(scratch)) cd.loose.push_back(i);
      }
      cand_.push_back(std::move(cd));
    }
    built_L_ = L;
    built_L1_ = L1;
    return true;
  }

  bool enumerate_non_b(int cap, std::vector<Counts>& out, long long& visited) {
    const int m = g_->order();
    if (!g_->is_dihedral()) {
      Counts c(m, 0);
      std::function<bool(int, int)> rec = [&](int e, int len) -> bool {
        if (e == m) {
          if (++visited > budget_) return false;
          if (!in_b_(c)) out.push_back(c);
          return true;
        }
        for (int k = 0; len + k <= cap; ++k) {
          c[e] = k;
          if (!rec(e + 1, len + k)) return false;
        }
        c[e] = 0;
        return true;
      };
      return rec(0, 0);
    }
    // Dihedral: join rotation parts and reflection parts by their sumset masks.
    const int n = g_->n();
    struct Part {
      Counts v;
      int size;
    };
    std::map<std::pair<std::uint64_t, int>, std::vector<Part>> rot, ref;
    Counts v(n, 0);
    std::function<bool(int, int, bool)> rec = [&](int e, int len, bool reflections) -> bool {
      if (e == n) {
        if (++visited > budget_) return false;
        if (reflections) {
          int l = total(v);
          if (l & 1) return true;
          std::uint64_t y = l ? in_b_.reflection_y_cached(v.data(), n) : 0;
          ref[{y, l > 0}].push_back({v, len});
        } else {
          rot[{detail::rotation_x(v.data(), n), detail::rotation_sigma(v.data(), n)}].push_back({v, len});
        }
        return true;
      }
      for (int k = 0; len + k <= cap; ++k) {
        v[e] = k;
        if (!rec(e + 1, len + k, reflections)) return false;
      }
      v[e] = 0;
      return true;
    };
    if (!rec(0, 0, false)) return false;
    if (!rec(0, 0, true)) return false;
    for (auto& [k, parts] : ref)
      std::sort(parts.begin(), parts.end(), [](const Part& a, const Part& b) { return a.size < b.size; });
    for (const auto& [rk, rparts] : rot)
      for (const auto& [fk, fparts] : ref) {
        bool in_b = fk.second ? (rk.first & detail::neg_bits(fk.first, n)) != 0 : rk.second == 0;
        if (in_b) continue;
        for (const auto& rp : rparts)
          for (const auto& fp : fparts) {
            if (rp.size + fp.size > cap) break;
            if (++visited > budget_) return false;
            Counts c(m);
            std::copy(rp.v.begin(), rp.v.end(), c.begin());
            std::copy(fp.v.begin(), fp.v.end(), c.begin() + n);
            out.push_back(std::move(c));
          }
      }
    return true;
  }

  GroupPtr g_;
  ProductOne in_b_;
  int k_cap_;
  long long budget_;
  AtomSet atoms_;
  int D_ = 0;
  std::vector<Counts> nontrivial_;
  std::vector<int> flat_, lens_;
  std::vector<Candidate> cand_;
  int built_L_ = -1, built_L1_ = -1;
};

}  // namespace zs
