#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace zs {

enum class Presentation { generic, dihedral, cyclic };

// Finite group given by a dense multiplication table. Dihedral elements are
// encoded as index = eps*n + x for a^x t^eps; cyclic elements as index = k for a^k.
class Group {
 public:
  static std::shared_ptr<const Group> dihedral(int n) {
    require(n >= 3, "invalid-parameter", "dihedral group needs n >= 3");
    auto g = std::shared_ptr<Group>(new Group());
    g->pres_ = Presentation::dihedral;
    g->n_ = n;
    g->order_ = 2 * n;
    g->identity_ = 0;
    g->mul_.resize(std::size_t(g->order_) * g->order_);
    for (int a = 0; a < 2 * n; ++a)
      for (int b = 0; b < 2 * n; ++b) {
        int e1 = a / n, x1 = a % n, e2 = b / n, x2 = b % n;
        int x = ((x1 + (e1 ? -x2 : x2)) % n + n) % n;
        g->mul_[std::size_t(a) * g->order_ + b] = (e1 ^ e2) * n + x;
      }
    g->finish();
    return g;
  }

  static std::shared_ptr<const Group> cyclic(int n) {
    require(n >= 1, "invalid-parameter", "cyclic group needs n >= 1");
    auto g = std::shared_ptr<Group>(new Group());
    g->pres_ = Presentation::cyclic;
    g->n_ = n;
    g->order_ = n;
    g->identity_ = 0;
    g->mul_.resize(std::size_t(n) * n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) g->mul_[std::size_t(a) * n + b] = (a + b) % n;
    g->finish();
    return g;
  }

  // Row-major table; associativity is checked exhaustively up to order 64
  // and on a deterministic sample of triples above that.
  static std::shared_ptr<const Group> from_table(const std::vector<std::vector<int>>& table) {
    const int m = int(table.size());
    require(m >= 1, "invalid-argument", "empty multiplication table");
    auto g = std::shared_ptr<Group>(new Group());
    g->pres_ = Presentation::generic;
    g->order_ = m;
    g->n_ = m;
    g->mul_.resize(std::size_t(m) * m);
    for (int a = 0; a < m; ++a) {
      require(int(table[a].size()) == m, "invalid-argument", "table is not square");
      for (int b = 0; b < m; ++b) {
        int v = table[a][b];
        require(v >= 0 && v < m, "invalid-argument", "table entry out of range");
        g->mul_[std::size_t(a) * m + b] = v;
      }
    }
    g->identity_ = -1;
    for (int e = 0; e < m && g->identity_ < 0; ++e) {
      bool ok = true;
      for (int a = 0; a < m && ok; ++a) ok = g->mul(e, a) == a && g->mul(a, e) == a;
      if (ok) g->identity_ = e;
    }
    require(g->identity_ >= 0, "invalid-argument", "table has no identity");
    std::uint64_t state = 0x9e3779b97f4a7c15ULL;
    auto next = [&]() {
      state ^= state << 13;
      state ^= state >> 7;
      state ^= state << 17;
      return int(state % std::uint64_t(m));
    };
    if (m <= 64) {
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
          for (int c = 0; c < m; ++c)
            require(g->mul(g->mul(a, b), c) == g->mul(a, g->mul(b, c)), "invalid-argument",
                    "table is not associative");
    } else {
      for (int s = 0; s < 200000; ++s) {
        int a = next(), b = next(), c = next();
        require(g->mul(g->mul(a, b), c) == g->mul(a, g->mul(b, c)), "invalid-argument",
                "table is not associative");
      }
    }
    g->finish();
    return g;
  }

  int order() const { return order_; }
  int n() const { return n_; }
  Presentation presentation() const { return pres_; }
  bool is_dihedral() const { return pres_ == Presentation::dihedral; }
  bool is_cyclic() const { return pres_ == Presentation::cyclic; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return mul_[std::size_t(a) * order_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int order_of(int a) const { return ord_[a]; }
  int pow(int a, long long k) const {
    k %= ord_[a];
    if (k < 0) k += ord_[a];
    int r = identity_;
    for (long long i = 0; i < k; ++i) r = mul(r, a);
    return r;
  }

  // dihedral helpers
  int rot(int x) const { return ((x % n_) + n_) % n_; }
  int refl(int y) const { return n_ + ((y % n_) + n_) % n_; }
  bool is_reflection(int a) const { return pres_ == Presentation::dihedral && a >= n_; }
  int exponent(int a) const { return pres_ == Presentation::generic ? a : a % n_; }

  bool commutes(int a, int b) const { return mul(a, b) == mul(b, a); }
  bool is_abelian() const {
    for (int a = 0; a < order_; ++a)
      for (int b = a + 1; b < order_; ++b)
        if (!commutes(a, b)) return false;
    return true;
  }

  std::string name() const {
    switch (pres_) {
      case Presentation::dihedral: return "D" + std::to_string(2 * n_);
      case Presentation::cyclic: return "C" + std::to_string(n_);
      default: return "table" + std::to_string(order_);
    }
  }

  std::string format(int a) const {
    if (a == identity_) return "1";
    if (pres_ == Presentation::generic) return "g" + std::to_string(a);
    int x = a % n_;
    bool t = pres_ == Presentation::dihedral && a >= n_;
    std::string r;
    if (x == 1) r = "a";
    else if (x > 1) r = "a^" + std::to_string(x);
    if (t) r = r.empty() ? "t" : r + "*t";
    return r;
  }

  int parse(std::string_view s) const {
    auto bad = [&]() { return Error("parse-error", "bad element '" + std::string(s) + "'"); };
    if (s == "1") return identity_;
    if (!s.empty() && s[0] == 'g') {
      int i = 0;
      auto [p, ec] = std::from_chars(s.data() + 1, s.data() + s.size(), i);
      if (ec != std::errc() || p != s.data() + s.size() || i < 0 || i >= order_) throw bad();
      return i;
    }
    if (pres_ == Presentation::generic) throw bad();
    long long x = 0;
    bool t = false;
    std::string_view rest = s;
    if (!rest.empty() && rest[0] == 'a') {
      rest.remove_prefix(1);
      x = 1;
      if (!rest.empty() && rest[0] == '^') {
        rest.remove_prefix(1);
        bool neg = !rest.empty() && rest[0] == '-';
        if (neg) rest.remove_prefix(1);
        const char* b = rest.data();
        auto [p, ec] = std::from_chars(b, b + rest.size(), x);
        if (ec != std::errc()) throw bad();
        if (neg) x = -x;
        rest.remove_prefix(std::size_t(p - b));
      }
      if (!rest.empty()) {
        if (rest[0] != '*') throw bad();
        rest.remove_prefix(1);
        if (rest != "t") throw bad();
        t = true;
        rest = {};
      }
    } else if (rest == "t") {
      t = true;
      rest = {};
    }
    if (!rest.empty() || (s.empty())) throw bad();
    if (t && pres_ != Presentation::dihedral) throw bad();
    int xm = int(((x % n_) + n_) % n_);
    return t ? n_ + xm : xm;
  }

 private:
  Group() = default;

  void finish() {
    inv_.assign(order_, -1);
    ord_.assign(order_, 0);
    for (int a = 0; a < order_; ++a) {
      for (int b = 0; b < order_; ++b)
        if (mul(a, b) == identity_) inv_[a] = b;
      require(inv_[a] >= 0, "invalid-argument", "element without inverse");
      int k = 1, p = a;
      while (p != identity_) p = mul(p, a), ++k;
      ord_[a] = k;
    }
  }

  Presentation pres_ = Presentation::generic;
  int n_ = 0;
  int order_ = 0;
  int identity_ = 0;
  std::vector<int> mul_, inv_, ord_;
};

using GroupPtr = std::shared_ptr<const Group>;

struct Subgroup {
  std::vector<int> members;  // sorted
  // For dihedral K_y = <K, a^y t>: K = <a^d>.
  std::optional<std::pair<int, int>> tag;

  bool contains(int a) const { return std::binary_search(members.begin(), members.end(), a); }
  int order() const { return int(members.size()); }
  bool operator==(const Subgroup& o) const { return members == o.members; }
};

inline Subgroup generated_subgroup(const Group& G, const std::vector<int>& gens) {
  std::vector<char> in(G.order(), 0);
  std::vector<int> members{G.identity()};
  in[G.identity()] = 1;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (int g : gens) {
      int p = G.mul(members[i], g);
      if (!in[p]) in[p] = 1, members.push_back(p);
    }
  }
  std::sort(members.begin(), members.end());
  return {members, std::nullopt};
}

inline Subgroup commutator_subgroup(const Group& G) {
  std::vector<int> comms;
  for (int g = 0; g < G.order(); ++g)
    for (int h = 0; h < G.order(); ++h)
      comms.push_back(G.mul(G.mul(G.inv(g), G.inv(h)), G.mul(g, h)));
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  return generated_subgroup(G, comms);
}

// K_y = <a^d, a^y t> inside D_2n.
inline Subgroup dihedral_subgroup(const Group& G, int d, int y) {
  require(G.is_dihedral(), "unsupported-presentation", "dihedral subgroup on non-dihedral group");
  Subgroup s = generated_subgroup(G, {G.rot(d), G.refl(y)});
  s.tag = std::make_pair(std::gcd(d, G.n()), ((y % G.n()) + G.n()) % G.n());
  return s;
}

}  // namespace zs
