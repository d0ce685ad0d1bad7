#include <gtest/gtest.h>

#include "oracles.hpp"
#include "zs/zs.hpp"

using namespace zs;

TEST(ContinuedFraction, Examples) {
  EXPECT_EQ(continued_fraction_odd(7, 3).terms, (std::vector<long long>{2, 2, 1}));
  EXPECT_EQ(continued_fraction_odd(7, 2).terms, (std::vector<long long>{3, 1, 1}));
  EXPECT_EQ(continued_fraction_odd(5, 4).terms, (std::vector<long long>{1, 3, 1}));
  EXPECT_THROW(continued_fraction_odd(3, 2), Error);
  EXPECT_THROW(continued_fraction_odd(7, 1), Error);
  EXPECT_THROW(continued_fraction_odd(7, 7), Error);
}

TEST(ContinuedFraction, ValuePreservedAndOdd) {
  for (long long n = 4; n <= 500; ++n)
    for (long long a = 2; a < n; ++a) {
      auto cf = continued_fraction_odd(n, a);
      ASSERT_EQ(cf.terms.size() % 2, 1u) << n << "/" << a;
      ASSERT_EQ(cf.value(), Rational(n, a)) << n << "/" << a;
    }
}

TEST(MinDeltaPair, Examples) {
  EXPECT_EQ(min_delta_pair(7, 3), 2);
  EXPECT_EQ(min_delta_pair(7, 2), 1);
  EXPECT_EQ(min_delta_pair(7, 5), 2);
}

// Brute force: sets of lengths of every product-one x g + y g^a with x + y <= 3n.
TEST(MinDeltaPair, MatchesBruteForce) {
  for (int n = 5; n <= 25; ++n)
    for (int a = 2; a <= n - 1; ++a) EXPECT_EQ(min_delta_pair(n, a), oracle::min_delta_two(n, 1, a, 3 * n)) << n << " " << a;
}

TEST(MinDeltaTwo, MatchesBruteForce) {
  for (int n = 4; n <= 16; ++n)
    for (int u = 1; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        ASSERT_EQ(min_delta_two(n, u, v), oracle::min_delta_two(n, u, v, 3 * n)) << n << " " << u << " " << v;
}

TEST(CyclicMinDelta, GNorm) {
  auto c7 = Group::cyclic(7);
  EXPECT_EQ(g_norm(Sequence::parse(c7, "a:4 a^3:1"), 1), 1);
  EXPECT_EQ(min_delta_cyclic_exact(c7, {1, 3}).value, 2);
  EXPECT_EQ(min_delta_cyclic_exact(Group::cyclic(5), {1, 4}).value, 3);
  EXPECT_EQ(min_delta_cyclic_exact(Group::cyclic(5), {1}).value, 0);
  auto w = min_delta_cyclic_exact(Group::cyclic(6), {2, 3});
  EXPECT_EQ(w.method, "lattice");
  EXPECT_FALSE(w.warning.empty());
}

TEST(CyclicMinDelta, GNormMatchesLattice) {
  for (int n = 5; n <= 12; ++n) {
    auto g = Group::cyclic(n);
    for (int a = 2; a < n; ++a) EXPECT_EQ(min_delta_cyclic_exact(g, {1, a}).value, min_delta_exact(g, {1, a}).value);
  }
}

// min Delta(G0) divides gcd{e (k(U) - 1)} with e the exponent of <G0>.
TEST(CyclicMinDelta, DivisibilityByCrossNumbers) {
  for (int n : {5, 6, 7, 8, 9}) {
    auto g = Group::cyclic(n);
    for (const auto& sub : nonempty_subsets(n)) {
      if (sub.size() > 3) continue;
      AtomSet atoms = atoms_over(g, sub);
      long long md = min_delta_exact(atoms).value;
      if (md == 0) continue;
      int e = generated_subgroup(*g, sub).order();
      long long gg = 0;
      for (const auto& a : atoms.atoms) {
        Rational k = Sequence(g, a).cross_number() - Rational(1);
        Rational ek = k * Rational(e);
        ASSERT_EQ(ek.denominator(), 1);
        gg = std::gcd(gg, std::abs(ek.numerator()));
      }
      EXPECT_EQ(gg % md, 0) << n;
    }
  }
}

TEST(ConditionStar, Examples) {
  EXPECT_TRUE(condition_star(7, 3));
  EXPECT_TRUE(condition_star(21, 5));
  EXPECT_FALSE(condition_star(5, 2));
  EXPECT_THROW(condition_star(9, 3), Error);
  EXPECT_THROW(condition_star(8, 3), Error);
}

TEST(ConditionStar, Family) {
  for (long long m = 3; m <= 45; m += 2) EXPECT_TRUE(condition_star(m * m - m + 1, m)) << m;
}

// 13 = 4^2 - 4 + 1 with even m: the triple gcd is 3, so (*) fails at i = 4.
TEST(ConditionStar, ThirteenAtFourAgainstExactDistances) {
  auto c = Group::cyclic(13);
  long long d1 = min_delta_exact(c, {1, 4}).value;
  long long d2 = min_delta_exact(c, {1, 10}).value;  // 1 - 4 = -3
  long long d3 = min_delta_exact(c, {3, 4}).value;
  EXPECT_EQ(std::gcd(std::gcd(d1, d2), d3), 3);
  EXPECT_EQ(triple_gcd(13, 4).gcd, 3);
  EXPECT_FALSE(condition_star(13, 4));
  // and in D26 over the three reflections
  auto g = Group::dihedral(13);
  EXPECT_EQ(min_delta_exact(g, {g->refl(0), g->refl(1), g->refl(4)}).value % 3, 0);
}

TEST(ConditionStar, InvariantUnderUnits) {
  for (long long n : {7, 11, 13, 21, 31}) {
    for (long long i = 2; i < n; ++i) {
      if (std::gcd(i, n) != 1) continue;
      for (long long j : star_class(n, i))
        if (j >= 2 && std::gcd(j, n) == 1) {
          EXPECT_EQ(condition_star(n, i), condition_star(n, j)) << n << " " << i;
        }
    }
  }
}

TEST(Sweep, Rows) {
  Sweep s = sweep_remark68(5, 13);
  ASSERT_EQ(s.rows.size(), 5u);
  EXPECT_EQ(s.skipped_even, (std::vector<long long>{6, 8, 10, 12}));
  EXPECT_TRUE(s.rows[0].eq_holds_for_all_i);
  EXPECT_FALSE(s.rows[1].eq_holds_for_all_i);
  EXPECT_EQ(s.rows[1].star_witnesses, (std::vector<long long>{3}));
  EXPECT_EQ(s.rows[1].star_i, (std::vector<long long>{3, 5}));
  EXPECT_TRUE(s.rows[4].star_witnesses.empty());
  EXPECT_THROW(sweep_remark68(3, 9), Error);
}

TEST(Sweep, ThreadCountDoesNotChangeOutput) {
  std::string one = emit(sweep_remark68(5, 301, 1), Format::csv);
  EXPECT_EQ(emit(sweep_remark68(5, 301, 4), Format::csv), one);
  EXPECT_EQ(emit(sweep_remark68(5, 301, 7), Format::json), emit(sweep_remark68(5, 301, 1), Format::json));
}

TEST(Sweep, EvenGcdWindow) {
  for (const auto& r : sweep_remark68(5, 999, 4).rows)
    EXPECT_LE(r.max_star_gcd, 2 * std::max<long long>(1, (r.n - 1) / 4)) << r.n;
}
