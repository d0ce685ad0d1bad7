#pragma once

#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "omega.hpp"
#include "report.hpp"
#include "structure.hpp"

namespace zs {

struct SuiteParams {
  std::vector<int> ns;  // empty: suite default
  long long from = 5, to = 2000;
  std::uint64_t seed = 20240601;
  int samples = 0;  // 0: suite default
  int kcap = 12;
  int threads = 1;
};

namespace suites {

inline std::vector<int> ns_or(const SuiteParams& p, std::vector<int> def) { return p.ns.empty() ? def : p.ns; }

inline json seqs_json(const GroupPtr& g, const std::vector<Counts>& v) {
  json a = json::array();
  for (const auto& c : v) a.push_back(Sequence(g, c).str());
  return a;
}

inline json set_json(const std::set<long long>& s) { return json(std::vector<long long>(s.begin(), s.end())); }

inline std::string tag(int n) { return "n=" + std::to_string(n); }

// xorshift-free helper: uniform enough for sampling, identical on every platform.
inline int pick(std::mt19937_64& rng, int lo, int hi) { return lo + int(rng() % std::uint64_t(hi - lo + 1)); }

inline Counts random_counts(std::mt19937_64& rng, int order, int len) {
  Counts c(order, 0);
  for (int k = 0; k < len; ++k) ++c[pick(rng, 0, order - 1)];
  return c;
}

inline VerificationSuite atoms_lemma52(const SuiteParams& p) {
  VerificationSuite s{"atoms-lemma-5.2", {}};
  const std::string A = s.id;
  for (int n : ns_or(p, {3, 5, 7})) {
    auto g = Group::dihedral(n);
    AtomSet atoms = enumerate_atoms(g, {g->rot(1), g->refl(0), g->refl(1)}, 2 * n);
    auto family = mixed_atom_family(g);
    s.check(A, tag(n) + " atom count", atoms.atoms.size(), 4 * n);
    s.check(A, tag(n) + " enumeration equals closed form", seqs_json(g, atoms.atoms), seqs_json(g, family));
    ProductOne in_b(g);
    bool all = true;
    for (const auto& a : atoms.atoms) all = all && is_atom(a, in_b);
    s.check_true(A, tag(n) + " every enumerated atom passes is_atom", all && atoms.certified_complete);
  }
  return s;
}

inline VerificationSuite maxatoms_prop24(const SuiteParams& p) {
  VerificationSuite s{"maxatoms-prop-2.4", {}};
  const std::string A = s.id;
  for (int n : ns_or(p, {3, 5})) {
    auto g = Group::dihedral(n);
    AtomSet atoms = enumerate_atoms(*g, g, 2 * n);
    std::vector<Counts> longest;
    for (const auto& a : atoms.atoms)
      if (total(a) == 2 * n) longest.push_back(a);
    auto forms = maximal_atom_forms(g);
    s.check(A, tag(n) + " D(G)", atoms.max_length(), 2 * n);
    s.check(A, tag(n) + " length-2n atoms equal forms (a)+(b)", seqs_json(g, longest), seqs_json(g, forms));
  }
  return s;
}

inline VerificationSuite lengths_thm51(const SuiteParams& p) {
  VerificationSuite s{"lengths-thm-5.1", {}};
  const std::string A = s.id;
  for (int n : ns_or(p, {3, 5})) {
    auto g = Group::dihedral(n);
    const int a = g->rot(1), t = g->refl(0), at = g->refl(1);
    Sequence U(g, {{t, n}, {at, n}});
    std::set<long long> deltas;
    std::vector<long long> cats;
    for (int k = 0; k <= n; ++k) {
      Sequence Uk(g, {{a, k}, {t, n - k}, {at, n - k}});
      Sequence prod = U.concat(Uk);
      Factorizer f(atoms_for(prod));
      auto L = lengths_of(f.lengths(prod.counts()));
      s.check(A, tag(n) + " k=" + std::to_string(k) + " L(U*U_k)", L, std::vector<int>{2, 2 * n - k});
      for (std::size_t i = 1; i < L.size(); ++i) deltas.insert(L[i] - L[i - 1]);
      if (n == 3) {
        int c = catenary_degree(f.factorizations(prod.counts()));
        cats.push_back(c);
        int maxd = L.size() > 1 ? L.back() - L[L.size() - 2] : 0;
        s.check_true(A, tag(n) + " k=" + std::to_string(k) + " 2 + max Delta <= c", L.size() < 2 || 2 + maxd <= c);
      }
    }
    std::set<long long> want;
    for (int d = n - 2; d <= 2 * n - 2; ++d) want.insert(d);
    s.check(A, tag(n) + " distances realized", set_json(deltas), set_json(want));
    if (n == 3) s.check(A, tag(n) + " max catenary degree of the family", *std::max_element(cats.begin(), cats.end()), 2 * n);
  }
  return s;
}

inline VerificationSuite omega_thm41(const SuiteParams& p) {
  VerificationSuite s{"omega-thm-4.1", {}};
  const std::string A = s.id;
  for (int n : ns_or(p, {3, 5, 7})) {
    auto g = Group::dihedral(n);
    ProductOne in_b(g);
    const int t = g->refl(0), at = g->refl(1);
    Sequence U(g, {{t, n}, {at, n}});
    std::vector<Counts> z;
    for (int k = 0; k < n; ++k) z.push_back(Sequence(g, {{t, 2}}).counts()), z.push_back(Sequence(g, {{at, 2}}).counts());
    Counts prod(g->order(), 0);
    for (const auto& c : z) prod = add(prod, c);
    s.check_true(A, tag(n) + " U*U = (t.t)^[n] (at.at)^[n]", prod == U.concat(U).counts());
    s.check_true(A, tag(n) + " cover is minimal", is_minimal_cover(U.counts(), z, in_b));
    OmegaResult lb = omega_lower_bound(U, in_b);
    s.check(A, tag(n) + " lower bound from U*U", lb.lower, 2 * n);
    if (n == 3) {
      OmegaSearch search(g, p.kcap);
      auto go = search.group_omega();
      if (go.exhaustive && go.value < p.kcap) s.check(A, tag(n) + " omega(G) exhaustive, k_cap=" + std::to_string(p.kcap), go.value, 2 * n);
      else s.bounded(A, tag(n) + " omega(G) within k_cap", go.value, -1, 2 * n);
      OmegaResult r = search.exhaustive(U.counts());
      if (r.exact()) s.check(A, tag(n) + " omega(U) exhaustive", r.lower, 2 * n);
      else s.bounded(A, tag(n) + " omega(U)", r.lower, -1, 2 * n);
    } else {
      s.bounded(A, tag(n) + " omega(G) witness only", lb.lower, -1, 2 * n);
    }
  }
  {
    auto c3 = Group::cyclic(3);
    OmegaSearch search(c3, 6);
    OmegaResult r = search.exhaustive(Sequence(c3, {{1, 3}}).counts());
    s.check(A, "C3 omega(a^[3])", r.exact() ? r.lower : -1, 3);
    s.check(A, "omega(empty)", search.exhaustive(Counts(3, 0)).lower, 0);
  }
  return s;
}

inline VerificationSuite davenport_prop23(const SuiteParams& p) {
  VerificationSuite s{"davenport-prop-2.3", {}};
  const std::string A = s.id;
  for (int n : ns_or(p, {3, 5})) {
    auto g = Group::dihedral(n);
    std::vector<int> all(g->order());
    std::iota(all.begin(), all.end(), 0);
    Davenport d = davenport_constants(g, all);
    s.check(A, tag(n) + " D(D_2n)", d.D, 2 * n);
    s.check(A, tag(n) + " d(D_2n)", d.d, n);
    s.check(A, tag(n) + " K(D_2n)", format_rational(d.K), std::to_string(n));
    Rational cap = std::max(Rational(1), Rational(d.D, 2));
    s.check_true(A, tag(n) + " k(U) <= max{1, D/2} for every atom", d.K <= cap);
  }
  for (int n = 1; n <= 9; ++n) {
    auto g = Group::cyclic(n);
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    s.check(A, "D(C" + std::to_string(n) + ")", atoms_over(g, all).max_length(), n);
  }
  return s;
}

inline VerificationSuite deltastar_thm66(const SuiteParams&) {
  VerificationSuite s{"deltastar-thm-6.6", {}};
  const std::string A = s.id;
  auto d6 = Group::dihedral(3);
  DeltaStar ds = delta_star_sets(d6);
  s.check(A, "Delta*(D6)", set_json(ds.delta_star), set_json({1, 2, 4}));
  auto c3 = Group::cyclic(3);
  s.check(A, "Delta*(C3)", set_json(delta_star_sets(c3).delta_star), set_json({1}));
  // closed forms
  s.check(A, "min Delta({t, a*t}) = 2n-2", min_delta_exact(d6, {d6->refl(0), d6->refl(1)}).value, 4);
  s.check(A, "min Delta({a, t}) = 2", min_delta_exact(d6, {d6->rot(1), d6->refl(0)}).value, 2);
  for (int n : {5, 7}) {
    auto c = Group::cyclic(n);
    s.check(A, "C" + std::to_string(n) + " min Delta({g, g^-1}) = ord-2", min_delta_exact(c, {1, n - 1}).value, n - 2);
  }
  // rotation subsets against the g-norm formula
  bool agree = true;
  auto cyc = Group::cyclic(3);
  for (const auto& sub : nonempty_subsets(3)) {
    long long lattice = min_delta_exact(d6, sub).value;
    long long norm = min_delta_cyclic_exact(cyc, sub).value;
    agree = agree && lattice == norm;
  }
  s.check_true(A, "rotation subsets: lattice = g-norm gcd", agree);
  return s;
}

inline VerificationSuite deltastarrho_thm67(const SuiteParams&) {
  VerificationSuite s{"deltastarrho-thm-6.7", {}};
  const std::string A = s.id;
  auto d6 = Group::dihedral(3);
  DeltaStar ds = delta_star_sets(d6);
  s.check(A, "Delta*_rho(D6)", set_json(ds.delta_star_rho), set_json({1, 4}));
  s.check_true(A, "{1, 2n-2} in Delta*_rho", ds.delta_star_rho.count(1) && ds.delta_star_rho.count(4));
  return s;
}

inline int lambda_formula(int n, int k) {
  const int l = k / (2 * n), j = k % (2 * n);
  if (j <= 1) return 2 * l + j;
  if (l == 0) return 2 * l + 2;
  return j <= n ? 2 * l + 1 : 2 * l + 2;
}

inline VerificationSuite rk_lambda_prop60(const SuiteParams&) {
  VerificationSuite s{"rk-lambda-prop-6.0", {}};
  const std::string A = s.id;
  const int n = 3;
  auto g = Group::dihedral(n);
  std::vector<int> all(g->order());
  std::iota(all.begin(), all.end(), 0);
  AtomSet atoms = atoms_over(g, all);
  Factorizer f(atoms);
  for (int k = 2; k <= 4; ++k) s.check(A, "rho_" + std::to_string(k) + "(D6)", rho_k(f, k), k * n);
  for (int j = 2; j <= 8; ++j)
    s.check(A, "lambda_" + std::to_string(j) + "(D6)", lambda_k(f, j, j), lambda_formula(n, j));
  for (int k = 2; k <= 3; ++k) {
    Unions u = unions_of_lengths(f, k);
    bool interval = int(u.U.size()) == u.U.back() - u.U.front() + 1;
    s.check_true(A, "U_" + std::to_string(k) + "(D6) is an interval", interval);
  }
  return s;
}

inline VerificationSuite halffact_lemma62(const SuiteParams&) {
  VerificationSuite s{"halffact-lemma-6.2", {}};
  const std::string A = s.id;
  auto g = Group::dihedral(3);
  int agree = 0, subsets = 0, gcd_law = 0, gcd_sets = 0, exact_agree = 0;
  for (const auto& sub : nonempty_subsets(g->order())) {
    ++subsets;
    AtomSet atoms = atoms_over(g, sub);
    MinDelta md = min_delta_exact(atoms);
    bool a = md.half_factorial();
    bool b = true;
    for (const auto& u : atoms.atoms) b = b && Sequence(g, u).cross_number() == Rational(1);
    // L(A) = {k(A)} for every product-one A up to twice the longest atom
    bool c = true;
    Factorizer f(atoms);
    std::set<int> distances;
    for_each_product_one(g, sub, 2 * atoms.max_length(), [&](const Counts& x) {
      auto L = lengths_of(f.lengths(x));
      Rational k = Sequence(g, x).cross_number();
      if (!(L.size() == 1 && k == Rational(L[0]))) c = false;
      for (std::size_t i = 1; i < L.size(); ++i) distances.insert(L[i] - L[i - 1]);
    });
    agree += a == b && b == c;
    exact_agree += (distances.empty() ? 0 : *distances.begin()) == md.value;
    if (!distances.empty()) {
      ++gcd_sets;
      long long gg = 0;
      for (int d : distances) gg = std::gcd(gg, (long long)d);
      gcd_law += *distances.begin() == gg;
    }
  }
  s.check(A, "triple equivalence over nonempty subsets of D6", agree, subsets);
  s.check(A, "subsets examined", subsets, 63);
  s.check(A, "min = gcd on every computed distance set", gcd_law, gcd_sets);
  s.claims.back().computed = json{{"agree", gcd_law}, {"sets", gcd_sets}};
  s.claims.back().expected = json{{"agree", gcd_sets}, {"sets", gcd_sets}};
  s.claims.back().status = gcd_law == gcd_sets ? Status::pass : Status::fail;
  s.check(A, "bounded min Delta equals lattice value", exact_agree, subsets);
  return s;
}

inline VerificationSuite transfer_lemma64(const SuiteParams& p) {
  VerificationSuite s{"transfer-lemma-6.4", {}};
  const std::string A = s.id;
  for (int n : ns_or(p, {3, 5, 7, 9})) {
    auto g = Group::dihedral(n);
    std::vector<int> rots(n);
    std::iota(rots.begin(), rots.end(), 0);
    int checked = 0, agree = 0;
    for_each_product_one(g, rots, n, [&](const Counts& c) {
      TransferCheck t = transfer_check(Sequence(g, c));
      ++checked;
      agree += t.agrees();
    });
    s.check(A, tag(n) + " U atom iff phi(U) atom, product-one U over <a> with |U| <= n", agree, checked);
  }
  auto g = Group::dihedral(3);
  auto phi = atom_transfer_phi(Sequence::parse(g, "a:3"));
  s.check(A, "phi(a^[3])", phi.str(), Sequence::parse(g, "t:3 a*t:3").str());
  auto two = transfer_check(Sequence::parse(g, "a:1 a^2:1"));
  s.check_true(A, "a.a^2 and its image are atoms", two.u_atom && two.phi_atom);
  auto six = transfer_check(Sequence::parse(g, "a:6"));
  s.check_true(A, "a^[6] and its image are not atoms", !six.u_atom && !six.phi_atom);
  return s;
}

inline VerificationSuite types_lemma67(const SuiteParams& p) {
  VerificationSuite s{"types-lemma-6.7", {}};
  const std::string A = s.id;
  for (int n : ns_or(p, {5, 7})) {
    auto g = Group::dihedral(n);
    int total_atoms = 0, classified = 0;
    for (int i = 2; i <= n - 1; ++i) {
      AtomSet atoms = enumerate_atoms(g, {g->refl(0), g->refl(1), g->refl(i)}, 2 * n);
      for (const auto& a : atoms.atoms) {
        ++total_atoms;
        try {
          classify_atom_type(Sequence(g, a), i);
          ++classified;
        } catch (const Error&) {
        }
      }
    }
    s.check(A, tag(n) + " atoms classified", classified, total_atoms);
  }
  auto g = Group::dihedral(7);
  s.check(A, "t^[2]", type_name(classify_atom_type(Sequence::parse(g, "t:2"), 3).type), "I");
  s.check(A, "(t.a*t)^[7], i=3", type_name(classify_atom_type(Sequence::parse(g, "t:7 a*t:7"), 3).type), "II");
  auto r = classify_atom_type(Sequence::parse(g, "t:5 a*t:4 a^3*t:1"), 3);
  s.check(A, "(a*t.t)^[4] (a^3*t.t), i=3", json{{"type", type_name(r.type)}, {"cyclic", r.cyclic_atom.str()}},
          json{{"type", "III"}, {"cyclic", "a:4 a^3:1"}});
  return s;
}

inline VerificationSuite divis_prop65(const SuiteParams& p) {
  VerificationSuite s{"divis-prop-6.5", {}};
  const std::string A = s.id;
  for (int n : ns_or(p, {5, 7})) {
    auto g = Group::dihedral(n);
    for (int i = 2; i <= n - 1; ++i) {
      long long d = min_delta_exact(g, {g->refl(0), g->refl(1), g->refl(i)}).value;
      TripleGcd t = triple_gcd(n, i);
      bool divides = d == 0 ? t.gcd == 0 : t.gcd % d == 0;
      auto& c = s.check_true(A, tag(n) + " i=" + std::to_string(i) + " min Delta(t, a*t, a^i*t) | triple gcd", divides);
      c.computed = json{{"min_delta", d}, {"triple_gcd", t.gcd}, {"divides", divides}};
      c.expected = json{{"divides", true}};
      c.status = divides ? Status::pass : Status::fail;
    }
  }
  return s;
}

inline VerificationSuite witness_lemma32(const SuiteParams& p) {
  VerificationSuite s{"witness-lemma-3.2", {}};
  const std::string A = s.id;
  auto d6 = Group::dihedral(3);
  auto w = nonabelian_witness(d6, d6->refl(0), d6->rot(1));
  s.check(A, "D6 (t, a)", json{{"U", w.U.str()}, {"m", w.m}, {"W", w.W.str()}, {"verified", w.verified}},
          json{{"U", "a:2 t:2"}, {"m", 3}, {"W", "a:6"}, {"verified", true}});
  auto d10 = Group::dihedral(5);
  auto w10 = nonabelian_witness(d10, d10->refl(0), d10->rot(1));
  s.check(A, "D10 (t, a)", json{{"m", w10.m}, {"verified", w10.verified}}, json{{"m", 5}, {"verified", true}});
  std::string code;
  try {
    auto c3 = Group::cyclic(3);
    nonabelian_witness(c3, 1, 2);
  } catch (const Error& e) {
    code = e.code();
  }
  s.check(A, "C3 pair", code, "no-witness");
  std::vector<GroupPtr> groups{d6, d10, Group::from_table(frobenius20_table())};
  std::mt19937_64 rng(p.seed);
  const int want = p.samples > 0 ? p.samples : 20;
  int verified = 0;
  for (int k = 0; k < want; ++k) {
    const GroupPtr& g = groups[k % groups.size()];
    int a, b;
    do {
      a = pick(rng, 0, g->order() - 1), b = pick(rng, 0, g->order() - 1);
    } while (g->commutes(a, b));
    verified += nonabelian_witness(g, a, b).verified;
  }
  s.check(A, "random non-commuting pairs over D6, D10, table20 verified", verified, want);
  return s;
}

inline VerificationSuite closure_prop31(const SuiteParams& p) {
  VerificationSuite s{"closure-prop-3.1", {}};
  const std::string A = s.id;
  auto d6 = Group::dihedral(3);
  Subgroup comm = commutator_subgroup(*d6);
  s.check(A, "alpha in closure", in_complete_integral_closure(Sequence::parse(d6, "a"), comm), true);
  s.check(A, "tau not in closure", in_complete_integral_closure(Sequence::parse(d6, "t"), comm), false);
  s.check(A, "t.a*t in closure", in_complete_integral_closure(Sequence::parse(d6, "t a*t"), comm), true);
  std::mt19937_64 rng(p.seed);
  const int want = p.samples > 0 ? p.samples : 200;
  for (int n : ns_or(p, {3, 5, 7})) {
    auto g = Group::dihedral(n);
    Subgroup c = commutator_subgroup(*g);
    int closed = 0, coset = 0;
    for (int k = 0; k < want; ++k) {
      Counts x = random_counts(rng, g->order(), pick(rng, 0, 9));
      Sequence sq(g, x);
      ElemSet pi_s = pi(sq);
      // one coset of G'
      int first = -1;
      bool same = true;
      for (int e = 0; e < g->order(); ++e) {
        if (!pi_s[e]) continue;
        if (first < 0) first = e;
        else same = same && c.contains(g->mul(g->inv(first), e));
      }
      coset += same;
      int q = first;
      Sequence po = sq.concat(Sequence(g, {{g->inv(q), 1}}));
      closed += in_complete_integral_closure(po, c);
    }
    s.check(A, tag(n) + " product-one samples in closure", closed, want);
    s.check(A, tag(n) + " pi(S) within one G' coset", coset, want);
  }
  return s;
}

inline VerificationSuite kneser_random(const SuiteParams& p) {
  VerificationSuite s{"kneser-random", {}};
  const std::string A = s.id;
  auto r6 = sumset_with_stabilizer({ZSet(6, {0, 3}), ZSet(6, {0, 3})});
  s.check(A, "Z/6 {0,3}+{0,3}", json{{"sum", r6.sum.members()}, {"H", r6.stab.members()}},
          json{{"sum", {0, 3}}, {"H", {0, 3}}});
  auto r7 = sumset_with_stabilizer({ZSet(7, {0, 1}), ZSet(7, {0, 1}), ZSet(7, {0, 1})});
  s.check(A, "Z/7 {0,1}+{0,1}+{0,1}", json{{"sum", r7.sum.members()}, {"H", r7.stab.members()}},
          json{{"sum", {0, 1, 2, 3}}, {"H", {0}}});
  s.check(A, "Z/3 Sigma_2(0.0.1)", n_term_subsums({2, 1, 0}, 3, 2).members(), std::vector<int>{0, 1});
  std::mt19937_64 rng(p.seed);
  const int want = p.samples > 0 ? p.samples : 1000;
  int ok = 0;
  for (int k = 0; k < want; ++k) {
    int n = pick(rng, 1, 30), m = pick(rng, 1, 5);
    std::vector<ZSet> sets;
    for (int j = 0; j < m; ++j) {
      ZSet z(n);
      int size = pick(rng, 1, n);
      for (int q = 0; q < size; ++q) z.insert(pick(rng, 0, n - 1));
      sets.push_back(z);
    }
    ok += kneser_holds(sets);
  }
  s.check(A, "random instances satisfying Kneser", ok, want);
  return s;
}

inline VerificationSuite pi_equivalence(const SuiteParams& p) {
  VerificationSuite s{"pi-equivalence", {}};
  const std::string A = s.id;
  auto d6 = Group::dihedral(3);
  auto str = [&](const GroupPtr& g, const ElemSet& e) {
    json a = json::array();
    for (int x : elements_of(e, g->order())) a.push_back(g->format(x));
    return a;
  };
  s.check(A, "pi(t.a*t)", str(d6, pi_dihedral(Sequence::parse(d6, "t a*t"))), json{"a", "a^2"});
  s.check(A, "pi(a.a)", str(d6, pi_dihedral(Sequence::parse(d6, "a:2"))), json{"a^2"});
  s.check(A, "pi(t.a*t.a)", str(d6, pi_dihedral(Sequence::parse(d6, "t a*t a"))), json{"1", "a", "a^2"});
  std::mt19937_64 rng(p.seed);
  const int want = p.samples > 0 ? p.samples : 500;
  for (int n : ns_or(p, {3, 5, 7, 9})) {
    auto g = Group::dihedral(n);
    int same = 0;
    for (int k = 0; k < want; ++k) {
      Sequence x(g, random_counts(rng, g->order(), pick(rng, 0, 8)));
      same += pi_dihedral(x) == pi_bruteforce(x);
    }
    s.check(A, tag(n) + " formula agrees with brute force", same, want);
  }
  return s;
}

inline VerificationSuite atom_bounds_sec4(const SuiteParams& p) {
  VerificationSuite s{"atom-bounds-sec4", {}};
  const std::string A = s.id;
  for (int n : ns_or(p, {3, 5, 7})) {
    auto g = Group::dihedral(n);
    AtomSet atoms = enumerate_atoms(*g, g, 2 * n);
    BoundViolations v = check_atom_bounds(atoms);
    s.check(A, tag(n) + " |U| <= 2n", v.length, 0);
    s.check(A, tag(n) + " h(U_refl) <= |U_refl|/2", v.reflection, 0);
    s.check(A, tag(n) + " |U_H| <= 2|H|-2", v.rotation_subgroup, 0);
    s.check(A, tag(n) + " |U_{H_z}| <= n+|H|-1, equality only for trivial H", v.dihedral_subgroup, 0);
  }
  return s;
}

inline VerificationSuite sweep_remark68_suite(const SuiteParams& p) {
  VerificationSuite s{"sweep-remark-6.8", {}};
  const std::string A = s.id;
  Sweep sw = sweep_remark68(p.from, p.to, p.threads);
  auto row = [&](long long n) -> const SweepRow* {
    for (const auto& r : sw.rows)
      if (r.n == n) return &r;
    return nullptr;
  };
  bool all_cf = true, window = true;
  for (const auto& r : sw.rows) {
    all_cf = all_cf && r.all_i_coprime_checked;
    window = window && r.max_star_gcd <= 2 * std::max<long long>(1, (r.n - 1) / 4);
  }
  s.check(A, "rows classified or skipped", sw.rows.size() + sw.skipped_even.size(), std::size_t(p.to - p.from + 1));
  s.check_true(A, "every coprime i evaluated by continued fractions", all_cf);
  s.check_true(A, "even triple gcds within 2 max{1,(n-1)/4}", window);
  for (long long m = 3; m * m - m + 1 <= p.to; m += 2) {
    long long n = m * m - m + 1;
    if (n < p.from) continue;
    const SweepRow* r = row(n);
    bool hit = r && std::find(r->star_i.begin(), r->star_i.end(), m) != r->star_i.end();
    s.check_true(A, "n=" + std::to_string(n) + " (*) at i=" + std::to_string(m), hit);
  }
  if (const SweepRow* r = row(5)) s.check(A, "n=5 Eq holds for all i", r->eq_holds_for_all_i, true);
  if (const SweepRow* r = row(7))
    s.check(A, "n=7 row", json{{"eq", r->eq_holds_for_all_i}, {"star", r->star_witnesses}},
            json{{"eq", false}, {"star", {3}}});
  if (row(13)) {
    // parity at n=13, i=4 against exact lattice distances
    long long d1 = min_delta_two(13, 1, 4), d2 = min_delta_two(13, 1, -3), d3 = min_delta_two(13, 4, 3);
    long long oracle = std::gcd(std::gcd(d1, d2), d3);
    s.check(A, "n=13 i=4 triple gcd", triple_gcd(13, 4).gcd, oracle);
  }
  return s;
}

}  // namespace suites

using SuiteFn = std::function<VerificationSuite(const SuiteParams&)>;

inline const std::vector<std::pair<std::string, SuiteFn>>& suite_registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"atoms-lemma-5.2", suites::atoms_lemma52},
      {"maxatoms-prop-2.4", suites::maxatoms_prop24},
      {"lengths-thm-5.1", suites::lengths_thm51},
      {"omega-thm-4.1", suites::omega_thm41},
      {"davenport-prop-2.3", suites::davenport_prop23},
      {"deltastar-thm-6.6", suites::deltastar_thm66},
      {"deltastarrho-thm-6.7", suites::deltastarrho_thm67},
      {"rk-lambda-prop-6.0", suites::rk_lambda_prop60},
      {"halffact-lemma-6.2", suites::halffact_lemma62},
      {"transfer-lemma-6.4", suites::transfer_lemma64},
      {"types-lemma-6.7", suites::types_lemma67},
      {"divis-prop-6.5", suites::divis_prop65},
      {"witness-lemma-3.2", suites::witness_lemma32},
      {"closure-prop-3.1", suites::closure_prop31},
      {"kneser-random", suites::kneser_random},
      {"pi-equivalence", suites::pi_equivalence},
      {"atom-bounds-sec4", suites::atom_bounds_sec4},
      {"sweep-remark-6.8", suites::sweep_remark68_suite},
  };
  return r;
}

inline VerificationSuite run_suite(const std::string& id, const SuiteParams& p = {}) {
  for (const auto& [name, fn] : suite_registry())
    if (name == id) {
      VerificationSuite s = fn(p);
      require(!s.claims.empty(), "configuration-error", "suite " + id + " produced no claims");
      return s;
    }
  throw Error("usage", "unknown suite '" + id + "'");
}

}  // namespace zs
