#pragma once

#include <boost/rational.hpp>
#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "group.hpp"

namespace zs {

// Multiplicity vector indexed by element index.
using Counts = std::vector<int>;
using Rational = boost::rational<long long>;

struct CountsHash {
  std::size_t operator()(const Counts& c) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (int v : c) {
      h ^= std::uint64_t(v) + 0x9e3779b97f4a7c15ULL;
      h *= 1099511628211ULL;
    }
    return std::size_t(h ^ (h >> 29));
  }
};

inline int total(const Counts& c) {
  int s = 0;
  for (int v : c) s += v;
  return s;
}

inline bool leq(const Counts& a, const Counts& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Counts add(Counts a, const Counts& b, int k = 1) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += k * b[i];
  return a;
}

inline Counts sub(Counts a, const Counts& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

class Sequence {
 public:
  Sequence() = default;
  explicit Sequence(GroupPtr g) : g_(std::move(g)), c_(g_->order(), 0) {}
  Sequence(GroupPtr g, Counts c) : g_(std::move(g)), c_(std::move(c)) {
    require(int(c_.size()) == g_->order(), "invalid-argument", "count vector size mismatch");
    for (int v : c_) require(v >= 0, "invalid-argument", "negative multiplicity");
  }
  Sequence(GroupPtr g, std::initializer_list<std::pair<int, int>> terms) : Sequence(std::move(g)) {
    for (auto [e, k] : terms) c_[e] += k;
  }

  // Grammar: whitespace separated `term[:mult]` items.
  static Sequence parse(GroupPtr g, std::string_view text) {
    Sequence s(g);
    std::istringstream in{std::string(text)};
    std::string item;
    while (in >> item) {
      int mult = 1;
      auto colon = item.find(':');
      std::string term = item.substr(0, colon);
      if (colon != std::string::npos) {
        try {
          std::size_t used = 0;
          mult = std::stoi(item.substr(colon + 1), &used);
          if (used != item.size() - colon - 1) throw std::invalid_argument("");
        } catch (const std::exception&) {
          throw Error("parse-error", "bad multiplicity in '" + item + "'");
        }
        require(mult >= 0, "parse-error", "negative multiplicity in '" + item + "'");
      }
      s.c_[g->parse(term)] += mult;
    }
    return s;
  }

  std::string str() const {
    std::string out;
    for (int e = 0; e < int(c_.size()); ++e) {
      if (!c_[e]) continue;
      if (!out.empty()) out += ' ';
      out += g_->format(e) + ":" + std::to_string(c_[e]);
    }
    return out;
  }

  const Group& group() const { return *g_; }
  const GroupPtr& group_ptr() const { return g_; }
  const Counts& counts() const { return c_; }
  int count(int e) const { return c_[e]; }
  int length() const { return total(c_); }
  bool empty() const { return length() == 0; }
  int h() const { return c_.empty() ? 0 : *std::max_element(c_.begin(), c_.end()); }

  std::vector<int> support() const {
    std::vector<int> s;
    for (int e = 0; e < int(c_.size()); ++e)
      if (c_[e]) s.push_back(e);
    return s;
  }

  // Terms listed with repetition, ascending by index.
  std::vector<int> terms() const {
    std::vector<int> t;
    for (int e = 0; e < int(c_.size()); ++e)
      for (int k = 0; k < c_[e]; ++k) t.push_back(e);
    return t;
  }

  bool divides(const Sequence& s) const { return leq(c_, s.c_); }

  Sequence concat(const Sequence& t) const { return Sequence(g_, add(c_, t.c_)); }

  Sequence remove(const Sequence& t) const {
    require(t.divides(*this), "not-a-subsequence", t.str() + " does not divide " + str());
    return Sequence(g_, sub(c_, t.c_));
  }

  Sequence power(int k) const {
    Sequence s(g_);
    for (std::size_t i = 0; i < c_.size(); ++i) s.c_[i] = c_[i] * k;
    return s;
  }

  Sequence inverse() const {
    Sequence s(g_);
    for (int e = 0; e < int(c_.size()); ++e) s.c_[g_->inv(e)] += c_[e];
    return s;
  }

  // Terms from the given index set only.
  Sequence restrict_to(const std::vector<int>& elems) const {
    Sequence s(g_);
    for (int e : elems) s.c_[e] = c_[e];
    return s;
  }

  Rational cross_number() const {
    Rational k(0);
    for (int e = 0; e < int(c_.size()); ++e)
      if (c_[e]) k += Rational(c_[e], g_->order_of(e));
    return k;
  }

  bool operator==(const Sequence& o) const { return c_ == o.c_; }
  bool operator<(const Sequence& o) const {
    int a = length(), b = o.length();
    if (a != b) return a < b;
    return c_ < o.c_;
  }

 private:
  GroupPtr g_;
  Counts c_;
};

inline std::string format_rational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// Parses a whitespace or comma separated element list.
inline std::vector<int> parse_subset(const Group& G, std::string_view text) {
  std::string t(text);
  std::replace(t.begin(), t.end(), ',', ' ');
  std::istringstream in(t);
  std::vector<int> out;
  std::string item;
  while (in >> item) out.push_back(G.parse(item));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace zs
