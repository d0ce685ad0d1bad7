#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <thread>
#include <vector>

#include "invariants.hpp"

namespace zs {

struct ContinuedFraction {
  long long n = 0, a = 0;
  std::vector<long long> terms;  // odd length

  Rational value() const {
    Rational v(terms.back());
    for (std::size_t i = terms.size() - 1; i-- > 0;) v = Rational(terms[i]) + Rational(1) / v;
    return v;
  }
};

inline std::vector<long long> euclid_terms(long long n, long long a) {
  std::vector<long long> t;
  while (a != 0) {
    t.push_back(n / a);
    long long r = n % a;
    n = a;
    a = r;
  }
  return t;
}

// Expansion of n/a normalized to odd length.
inline ContinuedFraction continued_fraction_odd(long long n, long long a) {
  require(n > 3, "invalid-parameter", "continued fraction needs n > 3");
  require(a >= 2 && a <= n - 1, "invalid-parameter", "continued fraction needs a in [2, n-1]");
  ContinuedFraction cf{n, a, euclid_terms(n, a)};
  auto& t = cf.terms;
  while (t.size() % 2 == 0) {
    if (t.back() >= 2) {
      --t.back();
      t.push_back(1);
    } else {
      t.pop_back();
      ++t.back();
    }
  }
  return cf;
}

// gcd(a_1, a_3, ..., a_{m-1}) of the odd-length expansion of n/a.
inline long long min_delta_pair(long long n, long long a) {
  auto cf = continued_fraction_odd(n, a);
  long long g = 0;
  for (std::size_t i = 1; i < cf.terms.size(); i += 2) g = std::gcd(g, cf.terms[i]);
  return g;
}

inline long long mod(long long x, long long n) { return ((x % n) + n) % n; }

inline long long inverse_mod(long long u, long long n) {
  long long g = n, x = 0, r = mod(u, n), y = 1;
  while (r) {
    long long q = g / r;
    std::tie(g, r) = std::make_pair(r, g - q * r);
    std::tie(x, y) = std::make_pair(y, x - q * y);
  }
  require(g == 1, "invalid-argument", "element is not a unit");
  return mod(x, n);
}

// Exact min Delta({g^u, g^v}) in C_n. The atoms of the rank-2 monoid are the
// minimal points (x, y) of {x u + y v = 0 mod n}; the lattice gcd does the rest.
inline long long min_delta_two(long long n, long long u, long long v) {
  u = mod(u, n), v = mod(v, n);
  // a single element, or an identity term: half-factorial
  if (u == v || u == 0 || v == 0) return 0;
  std::vector<long long> miny(n, -1);
  for (long long y = 0; y < n; ++y) {
    long long r = y * v % n;
    if (miny[r] < 0) miny[r] = y;
  }
  long long ordv = n / std::gcd(v, n), ordu = n / std::gcd(u, n);
  std::vector<Counts> atoms{{0, int(ordv)}};
  long long best = ordv;
  for (long long x = 1; x <= ordu; ++x) {
    long long y = miny[mod(-x * u, n)];
    if (y < 0 || y >= best) continue;
    atoms.push_back({int(x), int(y)});
    best = y;
  }
  return kernel_length_gcd(atoms, {0, 1});
}

// min Delta of a pair of exponents, reduced to the continued-fraction form when
// one of them is a unit; otherwise the exact lattice route.
struct PairDistance {
  long long value = 0;
  bool by_fraction = false;
};

inline PairDistance pair_min_delta(long long n, long long u, long long v) {
  u = mod(u, n), v = mod(v, n);
  for (auto [p, q] : {std::make_pair(u, v), std::make_pair(v, u)}) {
    if (std::gcd(p, n) != 1) continue;
    long long a = q * inverse_mod(p, n) % n;
    if (a <= 1) return {0, true};
    if (n > 3) return {min_delta_pair(n, a), true};
  }
  return {min_delta_two(n, u, v), false};
}

// ||S||_g for product-one S over <g>, with exponents taken in [1, ord(g)].
inline long long g_norm(const Sequence& s, int g) {
  const Group& G = s.group();
  require(G.is_cyclic(), "unsupported-presentation", "g-norm needs a cyclic group");
  const long long n = G.order();
  require(std::gcd<long long>(g, n) == 1, "invalid-argument", "g is not a generator");
  long long gi = inverse_mod(g, n), sum = 0;
  for (int e = 0; e < n; ++e) {
    if (!s.count(e)) continue;
    long long k = mod(e * gi, n);
    sum += (k == 0 ? n : k) * s.count(e);
  }
  require(sum % n == 0, "invalid-argument", "sequence is not product-one");
  return sum / n;
}

struct CyclicMinDelta {
  long long value = 0;  // 0: half-factorial
  int generator = -1;   // member of G_0 generating <G_0>, -1 if none
  std::string method;   // "g-norm" or "lattice"
  std::string warning;
};

// gcd{||V||_g - 1 : V atom} when some g in G_0 generates <G_0>.
inline CyclicMinDelta min_delta_cyclic_exact(const GroupPtr& g, const std::vector<int>& subset) {
  const Group& G = *g;
  require(G.is_cyclic(), "unsupported-presentation", "cyclic min Delta needs a cyclic group");
  const int m = generated_subgroup(G, subset).order();
  CyclicMinDelta r;
  for (int e : subset)
    if (G.order_of(e) == m) {
      r.generator = e;
      break;
    }
  AtomSet atoms = enumerate_atoms(g, subset, std::max(m, 1));
  if (r.generator < 0) {
    r.method = "lattice";
    r.warning = "no member of G_0 generates <G_0>";
    r.value = min_delta_exact(atoms).value;
    return r;
  }
  r.method = "g-norm";
  const long long n = G.order(), step = n / m;
  // exponents relative to the generator inside the subgroup of order m
  long long base = r.generator / step, binv = inverse_mod(base, m);
  for (const auto& a : atoms.atoms) {
    long long sum = 0;
    for (int e = 0; e < n; ++e) {
      if (!a[e]) continue;
      long long k = mod(e / step * binv, m);
      sum += (k == 0 ? m : k) * a[e];
    }
    r.value = std::gcd(r.value, sum / m - 1);
  }
  return r;
}

struct TripleGcd {
  long long d1 = 0, d2 = 0, d3 = 0;  // {1,i}, {1,1-i}, {i,i-1}
  long long gcd = 0;
  bool by_fraction = true;
};

inline TripleGcd triple_gcd(long long n, long long i) {
  TripleGcd t;
  auto p1 = pair_min_delta(n, 1, i), p2 = pair_min_delta(n, 1, 1 - i), p3 = pair_min_delta(n, i, i - 1);
  t.d1 = p1.value, t.d2 = p2.value, t.d3 = p3.value;
  t.by_fraction = p1.by_fraction && p2.by_fraction && p3.by_fraction;
  t.gcd = std::gcd(std::gcd(t.d1, t.d2), t.d3);
  return t;
}

inline bool condition_star(long long n, long long i) {
  require(n >= 5 && n % 2 == 1, "invalid-parameter", "condition (*) needs odd n >= 5");
  require(i >= 2 && i <= n - 1, "invalid-parameter", "i must lie in [2, n-1]");
  require(std::gcd(i, n) == 1, "invalid-parameter", "i must be coprime to n");
  long long g = triple_gcd(n, i).gcd;
  return g != 0 && g % 2 == 0;
}

// Orbit of i under i -> 1-i and i -> 1/i (the triple is invariant).
inline std::vector<long long> star_class(long long n, long long i) {
  std::vector<long long> orbit{mod(i, n)};
  for (std::size_t k = 0; k < orbit.size(); ++k) {
    long long x = orbit[k];
    std::vector<long long> next{mod(1 - x, n)};
    if (std::gcd(x, n) == 1) next.push_back(inverse_mod(x, n));
    for (long long y : next)
      if (std::find(orbit.begin(), orbit.end(), y) == orbit.end()) orbit.push_back(y);
  }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

struct SweepRow {
  long long n = 0;
  bool all_i_coprime_checked = true;
  bool eq_holds_for_all_i = true;
  std::vector<long long> star_witnesses;  // least member of each class satisfying (*)
  std::vector<long long> star_i;          // every coprime i satisfying (*)
  long long max_star_gcd = 0;
  int lattice_fallbacks = 0;
};

inline SweepRow sweep_row(long long n) {
  require(n >= 5 && n % 2 == 1, "invalid-parameter", "sweep rows need odd n >= 5");
  SweepRow row;
  row.n = n;
  for (long long i = 2; i <= n - 1; ++i) {
    // d3 is only needed when d1, d2 leave the gcd above 1
    auto p1 = pair_min_delta(n, 1, i), p2 = pair_min_delta(n, 1, 1 - i);
    long long g = std::gcd(p1.value, p2.value);
    bool cf = p1.by_fraction && p2.by_fraction;
    if (g != 1) {
      auto p3 = pair_min_delta(n, i, i - 1);
      g = std::gcd(g, p3.value);
      cf = cf && p3.by_fraction;
      if (!p3.by_fraction) ++row.lattice_fallbacks;
    }
    if (g != 1) row.eq_holds_for_all_i = false;
    if (std::gcd(i, n) != 1) continue;
    if (!cf) row.all_i_coprime_checked = false;
    if (g != 0 && g % 2 == 0) {
      row.star_i.push_back(i);
      row.max_star_gcd = std::max(row.max_star_gcd, g);
      if (star_class(n, i).front() == i) row.star_witnesses.push_back(i);
    }
  }
  return row;
}

struct Sweep {
  std::vector<SweepRow> rows;
  std::vector<long long> skipped_even;
};

// Rows are computed by `threads` workers over interleaved n and stored by
// position, so the result does not depend on the worker count.
inline Sweep sweep_remark68(long long lo, long long hi, int threads = 1) {
  require(lo >= 5 && lo <= hi, "invalid-parameter", "sweep range needs 5 <= from <= to");
  Sweep s;
  std::vector<long long> odd;
  for (long long n = lo; n <= hi; ++n) (n % 2 ? odd : s.skipped_even).push_back(n);
  s.rows.resize(odd.size());
  const std::size_t w = std::size_t(std::clamp(threads, 1, 256));
  auto work = [&](std::size_t t) {
    for (std::size_t k = t; k < odd.size(); k += w) s.rows[k] = sweep_row(odd[k]);
  };
  if (w == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < w; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  return s;
}

}  // namespace zs
