#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "factor.hpp"

namespace zs {

namespace detail {

inline long long checked_mul(long long a, long long b) {
  long long r;
  require(!__builtin_mul_overflow(a, b, &r), "resource-limit", "integer overflow in lattice reduction");
  return r;
}
inline long long checked_sub(long long a, long long b) {
  long long r;
  require(!__builtin_sub_overflow(a, b, &r), "resource-limit", "integer overflow in lattice reduction");
  return r;
}

}  // namespace detail

// gcd{ 1^T v : v in ker_Z A } where the columns of A are the atoms restricted to
// `rows`. Unimodular column reduction of [A; 1^T]: columns whose A-part vanishes
// form a kernel basis and carry 1^T v in the last row.
inline long long kernel_length_gcd(const std::vector<Counts>& atoms, const std::vector<int>& rows) {
  const int r = int(rows.size()), k = int(atoms.size());
  std::vector<std::vector<long long>> col(k, std::vector<long long>(r + 1));
  for (int j = 0; j < k; ++j) {
    for (int i = 0; i < r; ++i) col[j][i] = atoms[j][rows[i]];
    col[j][r] = 1;
  }
  auto axpy = [&](int dst, int src, long long q) {
    for (int i = 0; i <= r; ++i)
      col[dst][i] = detail::checked_sub(col[dst][i], detail::checked_mul(q, col[src][i]));
  };
  int piv = 0;
  for (int i = 0; i < r && piv < k; ++i) {
    while (true) {
      int best = -1;
      for (int j = piv; j < k; ++j)
        if (col[j][i] != 0 && (best < 0 || std::llabs(col[j][i]) < std::llabs(col[best][i]))) best = j;
      if (best < 0) break;
      bool reduced = false;
      for (int j = piv; j < k; ++j) {
        if (j == best || col[j][i] == 0) continue;
        axpy(j, best, col[j][i] / col[best][i]);
        reduced = true;
      }
      if (!reduced) {
        std::swap(col[piv], col[best]);
        ++piv;
        break;
      }
    }
  }
  long long g = 0;
  for (int j = piv; j < k; ++j) g = std::gcd(g, std::llabs(col[j][r]));
  return g;
}

struct MinDelta {
  long long value = 0;  // 0 means half-factorial (empty distance set)
  bool half_factorial() const { return value == 0; }
};

inline AtomSet atoms_over(const GroupPtr& g, const std::vector<int>& subset) {
  int bound = generated_subgroup(*g, subset).order();
  return enumerate_atoms(g, subset, bound);
}

// Exact min Delta(G_0) from the kernel lattice of the atom matrix.
inline MinDelta min_delta_exact(const AtomSet& atoms) {
  require(atoms.certified_complete, "resource-limit", "atom set not certified complete");
  return {kernel_length_gcd(atoms.atoms, atoms.subset)};
}

inline MinDelta min_delta_exact(const GroupPtr& g, const std::vector<int>& subset) {
  return min_delta_exact(atoms_over(g, subset));
}

// Calls f on every product-one count vector over `subset` with length in [1, bound].
inline void for_each_product_one(const GroupPtr& g, const std::vector<int>& subset, int bound,
                                 const std::function<void(const Counts&)>& f) {
  ProductOne in_b(g);
  Counts c(g->order(), 0);
  const int m = int(subset.size());
  std::function<void(int, int)> rec = [&](int pos, int len) {
    if (pos == m) {
      if (len > 0 && in_b(c)) f(c);
      return;
    }
    for (int k = 0; len + k <= bound; ++k) {
      c[subset[pos]] = k;
      rec(pos + 1, len + k);
    }
    c[subset[pos]] = 0;
  };
  rec(0, 0);
}

struct BoundedMinDelta {
  long long value = 0;  // gcd of all observed distances; 0 if none observed
  std::set<int> distances;
  int bound = 0;
};

inline BoundedMinDelta min_delta_bounded(const GroupPtr& g, const std::vector<int>& subset, int bound) {
  AtomSet atoms = atoms_over(g, subset);
  Factorizer f(atoms);
  BoundedMinDelta r;
  r.bound = bound;
  for_each_product_one(g, subset, bound, [&](const Counts& c) {
    auto L = lengths_of(f.lengths(c));
    for (std::size_t i = 1; i < L.size(); ++i) r.distances.insert(L[i] - L[i - 1]);
  });
  for (int d : r.distances) r.value = std::gcd(r.value, (long long)d);
  return r;
}

struct Davenport {
  int D = 0;
  int d = 0;
  Rational K{0};
};

// Longest product-one free sequence over `subset`, given the atoms over it.
inline int small_davenport(const GroupPtr& g, const std::vector<int>& subset, const AtomSet& atoms) {
  const int m = int(subset.size());
  std::vector<std::vector<int>> containing(g->order());
  for (int i = 0; i < int(atoms.atoms.size()); ++i)
    for (int e : subset)
      if (atoms.atoms[i][e]) containing[e].push_back(i);
  Counts c(g->order(), 0);
  int best = 0;
  std::function<void(int, int)> rec = [&](int pos, int len) {
    best = std::max(best, len);
    for (int p = pos; p < m; ++p) {
      int e = subset[p];
      ++c[e];
      bool free = true;
      for (int i : containing[e])
        if (leq(atoms.atoms[i], c)) {
          free = false;
          break;
        }
      if (free) rec(p, len + 1);
      --c[e];
    }
  };
  rec(0, 0);
  return best;
}

inline Davenport davenport_constants(const GroupPtr& g, const std::vector<int>& subset) {
  AtomSet atoms = atoms_over(g, subset);
  Davenport r;
  r.D = atoms.max_length();
  for (const auto& a : atoms.atoms) r.K = std::max(r.K, Sequence(g, a).cross_number());
  r.d = small_davenport(g, subset, atoms);
  return r;
}

struct CrossProfile {
  bool is_half_factorial = false;
  bool is_lcn = false;
};

inline CrossProfile cross_number_profile(const AtomSet& atoms) {
  CrossProfile p{true, true};
  for (const auto& a : atoms.atoms) {
    Rational k = Sequence(atoms.group, a).cross_number();
    if (k != Rational(1)) p.is_half_factorial = false;
    if (k < Rational(1)) p.is_lcn = false;
  }
  return p;
}

// Calls f on the product of every multiset of k atoms (indices ascending).
inline void for_each_atom_product(const std::vector<Counts>& atoms, int k,
                                  const std::function<void(const Counts&, const std::vector<int>&)>& f) {
  if (atoms.empty()) return;
  std::vector<int> idx;
  Counts cur(atoms[0].size(), 0);
  std::function<void(int)> rec = [&](int from) {
    if (int(idx.size()) == k) {
      f(cur, idx);
      return;
    }
    for (int i = from; i < int(atoms.size()); ++i) {
      idx.push_back(i);
      for (std::size_t e = 0; e < cur.size(); ++e) cur[e] += atoms[i][e];
      rec(i);
      for (std::size_t e = 0; e < cur.size(); ++e) cur[e] -= atoms[i][e];
      idx.pop_back();
    }
  };
  rec(0);
}

struct Unions {
  int k = 0;
  std::vector<int> U;  // union of all L containing k
  int rho = 0;
  int lambda = 0;
};

// U_k exactly: every element whose length set contains k is a product of k atoms.
inline Unions unions_of_lengths(Factorizer& f, int k) {
  require(k >= 1, "invalid-parameter", "k must be positive");
  Unions r;
  r.k = k;
  LenSet all;
  for_each_atom_product(f.atoms(), k, [&](const Counts& b, const std::vector<int>&) { all |= f.lengths(b); });
  r.U = lengths_of(all);
  r.rho = r.U.back();
  r.lambda = r.U.front();
  return r;
}

// rho_k = max of max L over products of k atoms.
inline int rho_k(Factorizer& f, int k) {
  int best = 0;
  for_each_atom_product(f.atoms(), k, [&](const Counts& b, const std::vector<int>&) {
    best = std::max(best, f.max_length(b));
  });
  return best;
}

// lambda_k = least l such that some product of l atoms has k in its length set.
inline int lambda_k(Factorizer& f, int k, int l_max) {
  for (int l = 1; l <= std::min(k, l_max); ++l) {
    bool hit = false;
    for_each_atom_product(f.atoms(), l, [&](const Counts& b, const std::vector<int>&) {
      if (!hit && f.lengths(b)[k]) hit = true;
    });
    if (hit) return l;
  }
  return -1;
}

struct DeltaStar {
  std::set<long long> delta_star;
  std::set<long long> delta_star_rho;
  std::map<std::vector<int>, long long> per_subset;  // non-half-factorial subsets
  std::vector<std::vector<int>> rho_supports;
};

inline std::vector<std::vector<int>> nonempty_subsets(int order) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 1; mask < (1u << order); ++mask) {
    std::vector<int> s;
    for (int e = 0; e < order; ++e)
      if (mask >> e & 1) s.push_back(e);
    out.push_back(s);
  }
  return out;
}

// Delta*(G) over all subsets; Delta*_rho over supports of products of at most
// `max_factors` maximal-length atoms B with rho(L(B)) = D(G)/2.
inline DeltaStar delta_star_sets(const GroupPtr& g, int max_factors = 4, int max_order = 10) {
  require(g->order() <= max_order, "resource-limit", "group too large for subset enumeration");
  DeltaStar r;
  for (const auto& s : nonempty_subsets(g->order())) {
    MinDelta md = min_delta_exact(g, s);
    if (md.half_factorial()) continue;
    r.per_subset[s] = md.value;
    r.delta_star.insert(md.value);
  }
  std::vector<int> all(g->order());
  std::iota(all.begin(), all.end(), 0);
  AtomSet atoms = atoms_over(g, all);
  const int D = atoms.max_length();
  std::vector<Counts> maximal;
  for (const auto& a : atoms.atoms)
    if (total(a) == D) maximal.push_back(a);
  Factorizer f(atoms);
  std::set<std::vector<int>> supports;
  for (int k = 1; k <= max_factors; ++k)
    for_each_atom_product(maximal, k, [&](const Counts& b, const std::vector<int>&) {
      auto L = lengths_of(f.lengths(b));
      // rho(L) = D/2 with min L = k
      if (2 * L.back() != D * L.front()) return;
      supports.insert(Sequence(g, b).support());
    });
  for (const auto& s : supports) {
    r.rho_supports.push_back(s);
    auto it = r.per_subset.find(s);
    if (it != r.per_subset.end()) r.delta_star_rho.insert(it->second);
  }
  return r;
}

}  // namespace zs
