#pragma once

#include <json.hpp>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "error.hpp"

namespace zs {

using json = nlohmann::json;

enum class Format { json, csv, text };

inline Format parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  if (s == "text") return Format::text;
  throw Error("invalid-parameter", "unknown format '" + s + "'");
}

enum class Status { pass, fail, bounded };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    default: return "bounded";
  }
}

struct Claim {
  std::string anchor;
  std::string name;
  json computed;
  json expected;
  Status status = Status::fail;
};

struct VerificationSuite {
  std::string id;
  std::vector<Claim> claims;

  // pass iff computed == expected
  Claim& check(const std::string& anchor, const std::string& name, json computed, json expected) {
    Status s = computed == expected ? Status::pass : Status::fail;
    claims.push_back({anchor, name, std::move(computed), std::move(expected), s});
    return claims.back();
  }
  Claim& check_true(const std::string& anchor, const std::string& name, bool ok) {
    return check(anchor, name, ok, true);
  }
  // computed interval [lo, hi] (hi < 0: unbounded) must contain expected
  Claim& bounded(const std::string& anchor, const std::string& name, long long lo, long long hi,
                 long long expected) {
    bool in = lo <= expected && (hi < 0 || expected <= hi);
    json iv = {{"lo", lo}, {"hi", hi < 0 ? json(nullptr) : json(hi)}};
    claims.push_back({anchor, name, iv, expected, in ? Status::bounded : Status::fail});
    return claims.back();
  }

  int count(Status s) const {
    int k = 0;
    for (const auto& c : claims) k += c.status == s;
    return k;
  }
  bool ok() const { return !claims.empty() && count(Status::fail) == 0; }
};

inline json to_json(const VerificationSuite& s) {
  json cl = json::array();
  for (const auto& c : s.claims)
    cl.push_back({{"anchor", c.anchor},
                  {"name", c.name},
                  {"computed", c.computed},
                  {"expected", c.expected},
                  {"status", status_name(c.status)}});
  return {{"id", s.id}, {"claims", cl}};
}

inline std::string csv_quote(const std::string& s) {
  std::string r = "\"";
  for (char c : s) r += c == '"' ? std::string("\"\"") : std::string(1, c);
  return r + "\"";
}

inline std::string emit(const VerificationSuite& s, Format f) {
  std::ostringstream out;
  switch (f) {
    case Format::json:
      out << to_json(s).dump() << '\n';
      break;
    case Format::csv:
      out << "id,anchor,name,status,computed,expected\n";
      for (const auto& c : s.claims)
        out << s.id << ',' << csv_quote(c.anchor) << ',' << csv_quote(c.name) << ','
            << status_name(c.status) << ',' << csv_quote(c.computed.dump()) << ','
            << csv_quote(c.expected.dump()) << '\n';
      break;
    case Format::text:
      out << "suite " << s.id << ": " << s.count(Status::pass) << " pass, " << s.count(Status::bounded)
          << " bounded, " << s.count(Status::fail) << " fail\n";
      for (const auto& c : s.claims)
        out << "  [" << status_name(c.status) << "] " << c.anchor << "  " << c.name
            << "  computed=" << c.computed.dump() << " expected=" << c.expected.dump() << '\n';
      break;
  }
  return out.str();
}

// One computed invariant with its provenance.
struct InvariantReport {
  std::string name;
  json value;
  std::string method;  // formula | oracle | bounded-search
  std::optional<long long> bound;
  json inputs = json::object();
  json extra = json::object();
};

inline InvariantReport make_report(std::string name, json value, std::string method,
                                   std::optional<long long> bound = std::nullopt) {
  InvariantReport r;
  r.name = std::move(name);
  r.value = std::move(value);
  r.method = std::move(method);
  r.bound = bound;
  return r;
}

inline json to_json(const InvariantReport& r) {
  json j = {{"name", r.name}, {"value", r.value}, {"method", r.method}, {"inputs", r.inputs}};
  if (r.bound) j["bound"] = *r.bound;
  for (auto it = r.extra.begin(); it != r.extra.end(); ++it) j[it.key()] = it.value();
  return j;
}

inline std::string emit(const InvariantReport& r, Format f) {
  std::ostringstream out;
  json j = to_json(r);
  switch (f) {
    case Format::json:
      out << j.dump() << '\n';
      break;
    case Format::csv:
      out << "name,method,bound,value\n"
          << r.name << ',' << r.method << ',' << (r.bound ? std::to_string(*r.bound) : "") << ','
          << csv_quote(r.value.dump()) << '\n';
      break;
    case Format::text:
      out << r.name << " = " << r.value.dump() << "  (" << r.method;
      if (r.bound) out << ", bound " << *r.bound;
      out << ")\n";
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (it.key() == "name" || it.key() == "value" || it.key() == "method" || it.key() == "bound") continue;
        out << "  " << it.key() << ": " << it.value().dump() << '\n';
      }
      break;
  }
  return out.str();
}

}  // namespace zs
