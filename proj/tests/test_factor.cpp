#include <gtest/gtest.h>

#include "oracles.hpp"
#include "zs/zs.hpp"

using namespace zs;

namespace {

std::set<Counts> as_set(const AtomSet& a) { return {a.atoms.begin(), a.atoms.end()}; }

std::vector<int> all_of(const Group& G) {
  std::vector<int> v(G.order());
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

TEST(Atoms, D6MatchesOracle) {
  auto g = Group::dihedral(3);
  auto got = enumerate_atoms(g, all_of(*g), 6);
  EXPECT_TRUE(got.certified_complete);
  EXPECT_EQ(as_set(got), oracle::atoms(*g, all_of(*g), 6));
  EXPECT_EQ(got.atoms.size(), 58u);
}

TEST(Atoms, SubsetsMatchOracle) {
  auto g = Group::dihedral(5);
  std::vector<std::vector<int>> subs{{g->rot(1), g->refl(0)}, {g->refl(0), g->refl(1), g->refl(3)}, {g->rot(2), g->refl(4)}};
  for (const auto& s : subs) EXPECT_EQ(as_set(enumerate_atoms(g, s, 10)), oracle::atoms(*g, s, 10));
  auto c = Group::cyclic(6);
  EXPECT_EQ(as_set(enumerate_atoms(c, all_of(*c), 6)), oracle::atoms(*c, all_of(*c), 6));
}

TEST(Atoms, GenericTableSmallLengths) {
  auto f = Group::from_table(frobenius20_table());
  std::vector<int> sub{1, 5, 6};
  EXPECT_EQ(as_set(enumerate_atoms(f, sub, 6)), oracle::atoms(*f, sub, 6));
}

TEST(Atoms, IsAtom) {
  auto g = Group::dihedral(3);
  EXPECT_TRUE(is_atom(Sequence::parse(g, "t:3 a*t:3")));
  EXPECT_FALSE(is_atom(Sequence::parse(g, "t:2 a*t:2")));
  EXPECT_FALSE(is_atom(Sequence::parse(g, "a t")));
  EXPECT_TRUE(is_atom(Sequence::parse(g, "1")));
}

TEST(Lengths, MatchOracle) {
  auto g = Group::dihedral(3);
  auto atoms = enumerate_atoms(g, all_of(*g), 6);
  Factorizer f(atoms);
  oracle::Lengths naive(*g, as_set(atoms));
  for (const char* s : {"t:3 a*t:3 a:3", "t:4 a*t:4", "t:6 a*t:6", "a:3 t:2 a*t:2 a^2*t:2", "a:6 t:2", "t:2 a*t:2 a^2*t:2"}) {
    Counts c = Sequence::parse(g, s).counts();
    auto L = lengths_of(f.lengths(c));
    auto want = naive(c);
    EXPECT_EQ(std::set<int>(L.begin(), L.end()), want) << s;
  }
}

TEST(Lengths, UTimesUk) {
  for (int n : {3, 5}) {
    auto g = Group::dihedral(n);
    Sequence U(g, {{g->refl(0), n}, {g->refl(1), n}});
    for (int k = 0; k <= n; ++k) {
      Sequence Uk(g, {{g->rot(1), k}, {g->refl(0), n - k}, {g->refl(1), n - k}});
      Sequence p = U.concat(Uk);
      Factorizer f(atoms_for(p));
      EXPECT_EQ(lengths_of(f.lengths(p.counts())), (std::vector<int>{2, 2 * n - k}));
    }
  }
}

TEST(Factorizations, DistanceAndCatenary) {
  EXPECT_EQ(factorization_distance({0, 0, 1}, {0, 2}), 2);
  EXPECT_EQ(factorization_distance({0, 1}, {0, 1}), 0);
  EXPECT_EQ(factorization_distance({0, 0, 0}, {1}), 3);
  auto g = Group::dihedral(3);
  Sequence s = Sequence::parse(g, "t:6 a*t:6");
  AtomSet atoms = atoms_for(s);
  Factorizer f(atoms);
  auto z = f.factorizations(s.counts());
  // (t.t)^3 (a*t.a*t)^3 and (t^3 a*t^3)^2
  EXPECT_EQ(z.size(), 2u);
  EXPECT_EQ(catenary_degree(z), 6);
  EXPECT_EQ(catenary_degree({{0, 1}}), 0);
}

TEST(Factorizations, AgreeWithLengths) {
  auto g = Group::dihedral(3);
  Sequence s = Sequence::parse(g, "a:3 t:3 a*t:3 a^2*t:1");
  s = s.concat(Sequence::parse(g, "a^2*t:1"));
  AtomSet atoms = atoms_for(s);
  Factorizer f(atoms);
  std::set<int> from_z;
  for (const auto& z : f.factorizations(s.counts())) {
    Counts sum(g->order(), 0);
    for (int i : z) sum = add(sum, atoms.atoms[i]);
    EXPECT_EQ(sum, s.counts());
    from_z.insert(int(z.size()));
  }
  auto L = lengths_of(f.lengths(s.counts()));
  EXPECT_EQ(std::set<int>(L.begin(), L.end()), from_z);
}

TEST(MinDelta, LatticeMatchesBoundedOracleOnD6) {
  auto g = Group::dihedral(3);
  int checked = 0;
  for (const auto& sub : nonempty_subsets(6)) {
    if (sub.size() > 3) continue;
    auto atoms = oracle::atoms(*g, sub, 6);
    oracle::Lengths naive(*g, atoms);
    long long gg = 0;
    Counts c(6, 0);
    auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
      if (pos == sub.size()) {
        if (oracle::len(c) && naive.in_b(c)) {
          int prev = -1;
          for (int l : naive(c)) {
            if (prev >= 0) gg = std::gcd(gg, (long long)(l - prev));
            prev = l;
          }
        }
        return;
      }
      for (int k = 0; k <= left; ++k) {
        c[sub[pos]] = k;
        self(self, pos + 1, left - k);
      }
      c[sub[pos]] = 0;
    };
    rec(rec, 0, 12);
    EXPECT_EQ(min_delta_exact(g, sub).value, gg) << ::testing::PrintToString(sub);
    ++checked;
  }
  EXPECT_EQ(checked, 41);
}

TEST(MinDelta, ClosedForms) {
  for (int n : {3, 5, 7}) {
    auto g = Group::dihedral(n);
    EXPECT_EQ(min_delta_exact(g, {g->refl(0), g->refl(1)}).value, 2 * n - 2);
  }
  auto d6 = Group::dihedral(3);
  EXPECT_EQ(min_delta_exact(d6, {d6->rot(1), d6->refl(0)}).value, 2);
  auto c5 = Group::cyclic(5);
  EXPECT_EQ(min_delta_exact(c5, {1, 4}).value, 3);
  EXPECT_TRUE(min_delta_exact(c5, {1}).half_factorial());
}

TEST(MinDelta, BoundedSearch) {
  auto c7 = Group::cyclic(7);
  auto b = min_delta_bounded(c7, {1, 3}, 14);
  EXPECT_EQ(b.value, 2);
  EXPECT_EQ(*b.distances.begin(), 2);
}

TEST(Davenport, Dihedral) {
  for (int n : {3, 5}) {
    auto g = Group::dihedral(n);
    Davenport d = davenport_constants(g, all_of(*g));
    EXPECT_EQ(d.D, 2 * n);
    EXPECT_EQ(d.d, n);
    EXPECT_EQ(d.K, Rational(n));
  }
}

TEST(Davenport, CyclicAndSmallDavenportOracle) {
  for (int n = 1; n <= 9; ++n) {
    auto g = Group::cyclic(n);
    Davenport d = davenport_constants(g, all_of(*g));
    EXPECT_EQ(d.D, n);
    EXPECT_EQ(d.d, n - 1);
  }
}

TEST(RhoLambda, D6) {
  auto g = Group::dihedral(3);
  Factorizer f(atoms_over(g, all_of(*g)));
  EXPECT_EQ(rho_k(f, 1), 1);
  EXPECT_EQ(rho_k(f, 2), 6);
  EXPECT_EQ(lambda_k(f, 7, 7), 3);
  EXPECT_EQ(lambda_k(f, 2, 2), 2);
  Unions u = unions_of_lengths(f, 2);
  EXPECT_EQ(u.U.front(), 2);
  EXPECT_EQ(u.U.back(), 6);
}

TEST(DeltaStar, D6AndC3) {
  auto d = delta_star_sets(Group::dihedral(3));
  EXPECT_EQ(d.delta_star, (std::set<long long>{1, 2, 4}));
  EXPECT_EQ(d.delta_star_rho, (std::set<long long>{1, 4}));
  EXPECT_EQ(delta_star_sets(Group::cyclic(3)).delta_star, (std::set<long long>{1}));
  EXPECT_THROW(delta_star_sets(Group::dihedral(7)), Error);
}

TEST(CrossNumber, Profile) {
  auto g = Group::dihedral(3);
  auto p = cross_number_profile(atoms_over(g, {g->rot(1), g->rot(2)}));
  EXPECT_FALSE(p.is_half_factorial);
  auto q = cross_number_profile(atoms_over(g, {g->refl(0)}));
  EXPECT_TRUE(q.is_half_factorial);
}
