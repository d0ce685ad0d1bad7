#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "error.hpp"

namespace zs {

// Subset of Z/nZ for n <= 64, one bit per residue.
struct ZSet {
  int n = 1;
  std::uint64_t bits = 0;

  ZSet() = default;
  explicit ZSet(int modulus, std::uint64_t b = 0) : n(modulus), bits(b & full(modulus)) {
    require(modulus >= 1 && modulus <= 64, "invalid-parameter", "ZSet modulus must lie in [1,64]");
  }
  ZSet(int modulus, std::initializer_list<int> xs) : ZSet(modulus) {
    for (int x : xs) insert(x);
  }

  static std::uint64_t full(int n) { return n == 64 ? ~0ULL : ((1ULL << n) - 1); }

  static std::uint64_t rotl(std::uint64_t m, int k, int n) {
    k %= n;
    if (k < 0) k += n;
    if (k == 0) return m;
    return ((m << k) | (m >> (n - k))) & full(n);
  }

  void insert(int x) { bits |= 1ULL << (((x % n) + n) % n); }
  bool contains(int x) const { return bits >> (((x % n) + n) % n) & 1; }
  int size() const { return std::popcount(bits); }
  bool empty() const { return bits == 0; }

  std::vector<int> members() const {
    std::vector<int> m;
    for (int x = 0; x < n; ++x)
      if (contains(x)) m.push_back(x);
    return m;
  }

  ZSet shifted(int k) const { return ZSet(n, rotl(bits, k, n)); }
  ZSet negated() const {
    ZSet r(n);
    for (int x = 0; x < n; ++x)
      if (contains(x)) r.insert(-x);
    return r;
  }

  bool operator==(const ZSet& o) const { return n == o.n && bits == o.bits; }
};

inline std::uint64_t sumset_bits(std::uint64_t a, std::uint64_t b, int n) {
  std::uint64_t r = 0;
  while (a) {
    int x = std::countr_zero(a);
    a &= a - 1;
    r |= ZSet::rotl(b, x, n);
  }
  return r;
}

inline ZSet sumset(const ZSet& a, const ZSet& b) {
  require(a.n == b.n, "invalid-argument", "mixed moduli");
  return ZSet(a.n, sumset_bits(a.bits, b.bits, a.n));
}

inline ZSet stabilizer(const ZSet& a) {
  ZSet h(a.n);
  for (int x = 0; x < a.n; ++x)
    if (a.shifted(x) == a) h.insert(x);
  return h;
}

struct SumsetResult {
  ZSet sum;
  ZSet stab;
};

inline SumsetResult sumset_with_stabilizer(const std::vector<ZSet>& sets) {
  require(!sets.empty(), "invalid-argument", "empty family");
  ZSet s(sets[0].n, 1);
  for (const auto& a : sets) s = sumset(s, a);
  return {s, stabilizer(s)};
}

// Kneser: |A_1+...+A_k| >= sum |A_i+H| - (k-1)|H| with H the stabilizer of the sum.
inline bool kneser_holds(const std::vector<ZSet>& sets) {
  auto [s, h] = sumset_with_stabilizer(sets);
  long long rhs = 0;
  for (const auto& a : sets) rhs += sumset(a, h).size();
  rhs -= (long long)(sets.size() - 1) * h.size();
  return s.size() >= rhs;
}

// Sigma_m(S): sums of m-term subsequences of S, given by residue multiplicities.
inline ZSet n_term_subsums(const std::vector<int>& mult, int n, int m) {
  require(int(mult.size()) == n, "invalid-argument", "multiplicity vector size mismatch");
  std::vector<std::uint64_t> dp(m + 1, 0);
  dp[0] = 1;
  for (int x = 0; x < n; ++x) {
    if (!mult[x]) continue;
    std::vector<std::uint64_t> nd(m + 1, 0);
    for (int k = 0; k <= m; ++k) {
      if (!dp[k]) continue;
      for (int c = 0; c <= mult[x] && k + c <= m; ++c)
        nd[k + c] |= ZSet::rotl(dp[k], int((long long)x * c % n), n);
    }
    dp.swap(nd);
  }
  return ZSet(n, dp[m]);
}

}  // namespace zs
