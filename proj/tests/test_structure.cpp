#include <gtest/gtest.h>

#include "oracles.hpp"
#include "zs/zs.hpp"

using namespace zs;

TEST(Witness, D6) {
  auto g = Group::dihedral(3);
  auto w = nonabelian_witness(g, g->refl(0), g->rot(1));
  EXPECT_TRUE(w.verified);
  EXPECT_EQ(w.m, 3);
  EXPECT_EQ(w.U.str(), "a:2 t:2");
  EXPECT_EQ(w.V.str(), "t:2");
  EXPECT_EQ(w.W.str(), "a:6");
  EXPECT_TRUE(oracle::is_atom(*g, w.U.counts()));
  EXPECT_TRUE(oracle::is_atom(*g, w.V.counts()));
}

TEST(Witness, EveryNonCommutingPair) {
  for (auto g : {Group::dihedral(3), Group::dihedral(4), Group::from_table(frobenius20_table())})
    for (int a = 0; a < g->order(); ++a)
      for (int b = 0; b < g->order(); ++b) {
        if (g->commutes(a, b)) {
          EXPECT_THROW(nonabelian_witness(g, a, b), Error);
          continue;
        }
        auto w = nonabelian_witness(g, a, b);
        ASSERT_TRUE(w.verified) << g->format(a) << " " << g->format(b);
        EXPECT_EQ(w.U.power(w.m), w.V.power(w.m).concat(w.W));
      }
}

TEST(Transfer, Examples) {
  auto g = Group::dihedral(3);
  EXPECT_EQ(atom_transfer_phi(Sequence::parse(g, "a:3")).str(), "t:3 a*t:3");
  EXPECT_TRUE(transfer_check(Sequence::parse(g, "a a^2")).agrees());
  EXPECT_THROW(atom_transfer_phi(Sequence::parse(g, "t")), Error);
  EXPECT_THROW(transfer_check(Sequence::parse(Group::dihedral(4), "a:4")), Error);
}

TEST(Transfer, AllCyclicAtomsAgainstOracle) {
  for (int n : {3, 5}) {
    auto g = Group::dihedral(n);
    std::vector<int> rots(n);
    std::iota(rots.begin(), rots.end(), 0);
    for (const auto& u : oracle::atoms(*g, rots, n)) {
      Sequence phi = atom_transfer_phi(Sequence(g, u));
      if (phi.length() > 8) continue;  // permutation oracle size
      EXPECT_TRUE(oracle::is_atom(*g, phi.counts())) << Sequence(g, u).str();
    }
  }
}

TEST(Types, Examples) {
  auto g = Group::dihedral(7);
  EXPECT_EQ(classify_atom_type(Sequence::parse(g, "t:2"), 3).type, 1);
  EXPECT_EQ(classify_atom_type(Sequence::parse(g, "t:7 a*t:7"), 3).type, 2);
  auto r = classify_atom_type(Sequence::parse(g, "t:5 a*t:4 a^3*t:1"), 3);
  EXPECT_EQ(type_name(r.type), "III");
  EXPECT_EQ(r.cyclic_atom.str(), "a:4 a^3:1");
  EXPECT_THROW(classify_atom_type(Sequence::parse(g, "t:3 a*t:3"), 3), Error);
  EXPECT_THROW(classify_atom_type(Sequence::parse(g, "a:7"), 3), Error);
}

TEST(Types, EveryAtomClassified) {
  for (int n : {5, 7}) {
    auto g = Group::dihedral(n);
    for (int i = 2; i < n; ++i) {
      AtomSet atoms = enumerate_atoms(g, {g->refl(0), g->refl(1), g->refl(i)}, 2 * n);
      std::set<int> seen;
      for (const auto& a : atoms.atoms) EXPECT_NO_THROW(seen.insert(classify_atom_type(Sequence(g, a), i).type));
      EXPECT_TRUE(seen.count(1) && seen.count(2));
    }
  }
}

TEST(ClosedForms, MixedFamilyMatchesOracle) {
  for (int n : {3, 5}) {
    auto g = Group::dihedral(n);
    auto want = oracle::atoms(*g, {g->rot(1), g->refl(0), g->refl(1)}, 2 * n);
    auto fam = mixed_atom_family(g);
    EXPECT_EQ(std::set<Counts>(fam.begin(), fam.end()), want);
    EXPECT_EQ(fam.size(), std::size_t(4 * n));
  }
}

TEST(ClosedForms, MaximalAtoms) {
  auto g = Group::dihedral(3);
  auto forms = maximal_atom_forms(g);
  EXPECT_EQ(forms.size(), 9u);
  auto all = oracle::atoms(*g, {0, 1, 2, 3, 4, 5}, 6);
  std::set<Counts> longest;
  for (const auto& a : all)
    if (oracle::len(a) == 6) longest.insert(a);
  EXPECT_EQ(std::set<Counts>(forms.begin(), forms.end()), longest);
  EXPECT_EQ(maximal_atom_forms(Group::dihedral(5)).size(), 30u);
}

TEST(Bounds, NoViolations) {
  for (int n : {3, 5}) {
    auto g = Group::dihedral(n);
    BoundViolations v = check_atom_bounds(enumerate_atoms(*g, g, 2 * n));
    EXPECT_EQ(v.total(), 0);
    EXPECT_GT(v.atoms, 0);
  }
}

TEST(Bounds, DetectsViolation) {
  auto g = Group::dihedral(3);
  AtomSet fake;
  fake.group = g;
  fake.atoms = {Sequence::parse(g, "a:7").counts()};
  BoundViolations v = check_atom_bounds(fake);
  EXPECT_EQ(v.reflection, 0);
  EXPECT_EQ(v.length, 1);
  EXPECT_GT(v.rotation_subgroup, 0);
  fake.atoms = {Sequence::parse(g, "t:3 a*t:1").counts()};
  EXPECT_EQ(check_atom_bounds(fake).reflection, 1);
}

TEST(Frobenius, TableIsTheSemidirectProduct) {
  auto f = Group::from_table(frobenius20_table());
  // x = (1,0) of order 5, y = (0,1) of order 4, y x y^-1 = x^2
  const int x = 1, y = 5;
  EXPECT_EQ(f->order_of(x), 5);
  EXPECT_EQ(f->order_of(y), 4);
  EXPECT_EQ(f->mul(f->mul(y, x), f->inv(y)), f->mul(x, x));
}
