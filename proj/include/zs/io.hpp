#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "cyclic.hpp"
#include "report.hpp"

namespace zs {

// {"order": m, "table": [[...], ...]}
inline GroupPtr load_table(const std::string& path) {
  std::ifstream in(path);
  require(bool(in), "invalid-argument", "cannot open table file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error("parse-error", std::string("table file: ") + e.what());
  }
  require(j.contains("order") && j.contains("table"), "parse-error", "table file needs order and table");
  auto t = j.at("table").get<std::vector<std::vector<int>>>();
  require(int(t.size()) == j.at("order").get<int>(), "invalid-argument", "order does not match table");
  return Group::from_table(t);
}

// D<2n>, C<n> or table:<path>
inline GroupPtr parse_group(const std::string& spec) {
  if (spec.rfind("table:", 0) == 0) return load_table(spec.substr(6));
  auto number = [&](const std::string& s) {
    require(!s.empty() && s.size() < 9 && s.find_first_not_of("0123456789") == std::string::npos, "parse-error",
            "bad group spec '" + spec + "'");
    return std::stoi(s);
  };
  require(spec.size() >= 2, "parse-error", "bad group spec '" + spec + "'");
  if (spec[0] == 'D') {
    int m = number(spec.substr(1));
    require(m >= 6 && m % 2 == 0, "invalid-parameter", "dihedral order must be even and >= 6");
    return Group::dihedral(m / 2);
  }
  if (spec[0] == 'C') return Group::cyclic(number(spec.substr(1)));
  throw Error("parse-error", "bad group spec '" + spec + "'");
}

inline std::string join(const std::vector<long long>& v, char sep = ' ') {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? std::string(1, sep) : "") + std::to_string(v[i]);
  return s;
}

inline json to_json(const Sweep& s) {
  json rows = json::array();
  for (const auto& r : s.rows)
    rows.push_back({{"n", r.n},
                    {"all_i_coprime_checked", r.all_i_coprime_checked},
                    {"eq_holds_for_all_i", r.eq_holds_for_all_i},
                    {"star_witnesses", r.star_witnesses}});
  return {{"rows", rows}, {"skipped_even", s.skipped_even}};
}

inline std::string emit(const Sweep& s, Format f) {
  std::ostringstream out;
  switch (f) {
    case Format::json:
      out << to_json(s).dump() << '\n';
      break;
    case Format::csv:
      out << "n,all_i_coprime_checked,eq_holds_for_all_i,star_witnesses\n";
      for (const auto& r : s.rows)
        out << r.n << ',' << (r.all_i_coprime_checked ? "true" : "false") << ','
            << (r.eq_holds_for_all_i ? "true" : "false") << ',' << csv_quote(join(r.star_witnesses)) << '\n';
      break;
    case Format::text:
      for (const auto& r : s.rows) {
        out << "n=" << r.n << (r.eq_holds_for_all_i ? "  Eq holds for all i" : "  Eq fails");
        if (!r.star_witnesses.empty()) out << "  (*) at i=" << join(r.star_witnesses, ',');
        if (!r.all_i_coprime_checked) out << "  [lattice fallback]";
        out << '\n';
      }
      if (!s.skipped_even.empty()) out << "skipped " << s.skipped_even.size() << " even n\n";
      break;
  }
  return out.str();
}

// FNV-1a, 64 bit
inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) h = (h ^ c) * 0x100000001b3ULL;
  return h;
}

// Content-addressed report cache: one file per canonical argument string.
class ReportCache {
 public:
  explicit ReportCache(std::string dir) : dir_(std::move(dir)) {
    if (!dir_.empty()) std::filesystem::create_directories(dir_);
  }
  bool enabled() const { return !dir_.empty(); }

  std::optional<std::string> get(const std::string& key) const {
    if (!enabled()) return std::nullopt;
    std::ifstream in(path(key), std::ios::binary);
    if (!in) return std::nullopt;
    std::string first;
    std::getline(in, first);
    if (first != key) return std::nullopt;  // hash collision
    std::ostringstream rest;
    rest << in.rdbuf();
    return rest.str();
  }
  void put(const std::string& key, const std::string& body) const {
    if (!enabled()) return;
    auto p = path(key);
    auto tmp = p;
    tmp += ".tmp";
    {
      std::ofstream out(tmp, std::ios::binary);
      out << key << '\n' << body;
    }
    std::filesystem::rename(tmp, p);
  }

 private:
  std::filesystem::path path(const std::string& key) const {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)fnv1a(key));
    return std::filesystem::path(dir_) / (std::string(buf) + ".out");
  }
  std::string dir_;
};

}  // namespace zs
