#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "cyclic.hpp"

namespace zs {

struct NonabelianWitness {
  Sequence U, V, W;
  int m = 0;
  bool verified = false;
};

// U = g h g^-1 (g h^-1 g^-1), V = g g^-1, W = (h (g h^-1 g^-1))^[m], m = ord(h g h^-1 g^-1).
inline NonabelianWitness nonabelian_witness(const GroupPtr& gp, int g, int h) {
  const Group& G = *gp;
  require(G.mul(g, h) != G.mul(h, g), "no-witness", "g and h commute");
  const int gi = G.inv(g), hi = G.inv(h);
  const int k = G.mul(G.mul(g, hi), gi);
  NonabelianWitness w{Sequence(gp), Sequence(gp), Sequence(gp)};
  w.U = Sequence(gp, {{g, 1}, {h, 1}, {gi, 1}, {k, 1}});
  w.V = Sequence(gp, {{g, 1}, {gi, 1}});
  w.m = G.order_of(G.mul(G.mul(h, g), G.mul(hi, gi)));
  w.W = Sequence(gp, {{h, 1}, {k, 1}}).power(w.m);
  ProductOne in_b(gp, std::max(24, w.W.length()));
  bool same = w.U.power(w.m) == w.V.power(w.m).concat(w.W);
  bool atoms = is_atom(w.U.counts(), in_b) && is_atom(w.V.counts(), in_b);
  bool w_ok = w.W.length() > 0 && in_b(w.W);
  w.verified = same && atoms && w_ok;
  return w;
}

// phi(U) = prod_g (g t . t)^[v_g(U)] for U over <a>.
inline Sequence atom_transfer_phi(const Sequence& u) {
  const Group& G = u.group();
  require(G.is_dihedral(), "unsupported-presentation", "transfer needs a dihedral group");
  const int n = G.n();
  Counts c(G.order(), 0);
  for (int e = 0; e < G.order(); ++e) {
    if (!u.count(e)) continue;
    require(e < n, "invalid-argument", "support outside <a>");
    c[G.refl(e)] += u.count(e);
    c[G.refl(0)] += u.count(e);
  }
  return Sequence(u.group_ptr(), c);
}

struct TransferCheck {
  bool u_atom = false;
  bool phi_atom = false;
  bool agrees() const { return u_atom == phi_atom; }
};

inline TransferCheck transfer_check(const Sequence& u) {
  require(u.group().n() % 2 == 1, "invalid-parameter", "transfer needs n odd");
  ProductOne in_b(u.group_ptr());
  Sequence p = atom_transfer_phi(u);
  return {is_atom(u.counts(), in_b), is_atom(p.counts(), in_b)};
}

struct AtomType {
  int type = 0;  // 1..5
  int x = 0, y = 0;
  Sequence cyclic_atom;  // side-condition atom over <a>, Types III-V
};

inline std::string type_name(int t) {
  static const char* names[] = {"?", "I", "II", "III", "IV", "V"};
  return names[t >= 1 && t <= 5 ? t : 0];
}

// Matches an atom over {t, a t, a^i t} against the five closed forms.
inline AtomType classify_atom_type(const Sequence& a, int i) {
  const Group& G = a.group();
  require(G.is_dihedral(), "unsupported-presentation", "types need a dihedral group");
  const int n = G.n();
  require(i >= 2 && i <= n - 1, "invalid-parameter", "i must lie in [2, n-1]");
  const int t0 = G.refl(0), t1 = G.refl(1), ti = G.refl(i);
  for (int e : a.support())
    require(e == t0 || e == t1 || e == ti, "invalid-argument", "support outside {t, a*t, a^i*t}");
  const int c0 = a.count(t0), c1 = a.count(t1), ci = a.count(ti);
  const int nz = (c0 > 0) + (c1 > 0) + (ci > 0);
  auto fail = [&]() -> AtomType { throw Error("classification-failure", "no type matches " + a.str()); };
  AtomType r{0, 0, 0, Sequence(a.group_ptr())};
  if (nz == 1) {
    if (c0 + c1 + ci != 2) fail();
    r.type = 1;
    return r;
  }
  if (nz == 2) {
    int ord01 = n, ord0i = n / std::gcd(i, n), ord1i = n / std::gcd(i - 1, n);
    bool ok = (ci == 0 && c0 == ord01 && c1 == ord01) || (c1 == 0 && c0 == ord0i && ci == ord0i) ||
              (c0 == 0 && c1 == ord1i && ci == ord1i);
    if (!ok) fail();
    r.type = 2;
    return r;
  }
  // one reflection pairs with each of the other two
  int x, y;
  Counts cyc(G.order(), 0);
  if (c0 == c1 + ci) {
    r.type = 3, x = c1, y = ci;
    cyc[G.rot(1)] += x, cyc[G.rot(i)] += y;
  } else if (c1 == c0 + ci) {
    r.type = 4, x = c0, y = ci;
    cyc[G.rot(1)] += x, cyc[G.rot(1 - i)] += y;
  } else if (ci == c1 + c0) {
    r.type = 5, x = c1, y = c0;
    cyc[G.rot(i)] += y, cyc[G.rot(i - 1)] += x;
  } else {
    return fail();
  }
  if (x < 1 || x > n - 1 || y < 1 || y > n - 1) fail();
  r.x = x, r.y = y;
  r.cyclic_atom = Sequence(a.group_ptr(), cyc);
  if (!is_atom(r.cyclic_atom)) fail();
  return r;
}

// A({a, t, a t}) in closed form.
inline std::vector<Counts> mixed_atom_family(const GroupPtr& gp) {
  const Group& G = *gp;
  const int n = G.n();
  const int a = G.rot(1), t = G.refl(0), at = G.refl(1);
  std::set<Counts> out;
  auto make = [&](int ka, int kt, int kat) {
    Counts c(G.order(), 0);
    c[a] = ka, c[t] = kt, c[at] = kat;
    out.insert(c);
  };
  for (int j = 0; j <= n; ++j) make(j, n - j, n - j);
  for (int j = 1; j <= n - 1; ++j) make(2 * j - 1, 1, 1);
  for (int j = 0; j <= n - 1; ++j) make(2 * j, 2, 0), make(2 * j, 0, 2);
  std::vector<Counts> v(out.begin(), out.end());
  std::sort(v.begin(), v.end(), canonical_less);
  return v;
}

// Length-2n atoms of forms (a) and (b) over every presentation (a', t').
inline std::vector<Counts> maximal_atom_forms(const GroupPtr& gp) {
  const Group& G = *gp;
  require(G.is_dihedral(), "unsupported-presentation", "maximal atom forms need a dihedral group");
  const int n = G.n();
  std::set<Counts> out;
  for (int u = 1; u < n; ++u) {
    if (std::gcd(u, n) != 1) continue;
    const int a = G.rot(u);
    for (int v = 0; v < n; ++v) {
      const int t = G.refl(v);
      Counts c(G.order(), 0);
      c[a] = 2 * n - 2, c[t] = 2;
      out.insert(c);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          if (std::gcd(j - i, n) != 1) continue;
          Counts d(G.order(), 0);
          d[G.mul(G.pow(a, i), t)] += n;
          d[G.mul(G.pow(a, j), t)] += n;
          out.insert(d);
        }
    }
  }
  std::vector<Counts> v(out.begin(), out.end());
  std::sort(v.begin(), v.end(), canonical_less);
  return v;
}

struct BoundViolations {
  long long atoms = 0;
  long long length = 0;      // |U| <= 2n
  long long reflection = 0;  // h(U_refl) <= |U_refl|/2 when |U_refl| > 2
  long long rotation_subgroup = 0;  // |U_H| <= 2|H| - 2
  long long dihedral_subgroup = 0;  // |U_{H_z}| <= n + |H| - 1, equality only for H trivial
  long long total() const { return length + reflection + rotation_subgroup + dihedral_subgroup; }
};

inline BoundViolations check_atom_bounds(const AtomSet& atoms) {
  const Group& G = *atoms.group;
  require(G.is_dihedral(), "unsupported-presentation", "atom bounds need a dihedral group");
  const int n = G.n();
  std::vector<Subgroup> rot, dih;
  for (int d = 1; d <= n; ++d) {
    if (n % d) continue;
    rot.push_back(generated_subgroup(G, {G.rot(d)}));
    if (d == 1) continue;  // H_z proper
    for (int z = 0; z < n; ++z) dih.push_back(dihedral_subgroup(G, d, z));
  }
  BoundViolations v;
  for (const auto& c : atoms.atoms) {
    ++v.atoms;
    const int len = total(c);
    if (len > 2 * n) ++v.length;
    int lr = 0, hr = 0;
    for (int y = 0; y < n; ++y) lr += c[G.refl(y)], hr = std::max(hr, c[G.refl(y)]);
    if (lr > 2 && 2 * hr > lr) ++v.reflection;
    auto in = [&](const Subgroup& s) {
      int k = 0;
      for (int e : s.members) k += c[e];
      return k;
    };
    if (len > 1)
      for (const auto& h : rot)
        if (in(h) > 2 * h.order() - 2) ++v.rotation_subgroup;
    for (const auto& h : dih) {
      int hk = h.order() / 2, k = in(h);
      if (k > n + hk - 1 || (k == n + hk - 1 && hk > 1)) ++v.dihedral_subgroup;
    }
  }
  return v;
}

// Frobenius group C5 x| C4 as a plain table: (a, b) = x^a y^b, y x y^-1 = x^2.
inline std::vector<std::vector<int>> frobenius20_table() {
  std::vector<std::vector<int>> t(20, std::vector<int>(20));
  const int pw[4] = {1, 2, 4, 3};
  for (int p = 0; p < 20; ++p)
    for (int q = 0; q < 20; ++q) {
      int a1 = p % 5, b1 = p / 5, a2 = q % 5, b2 = q / 5;
      t[p][q] = (b1 + b2) % 4 * 5 + (a1 + pw[b1] * a2) % 5;
    }
  return t;
}

}  // namespace zs
