#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "zs/zs.hpp"

using namespace zs;

TEST(Report, EmptySuite) {
  VerificationSuite s{"x", {}};
  EXPECT_EQ(emit(s, Format::json), "{\"claims\":[],\"id\":\"x\"}\n");
  EXPECT_FALSE(s.ok());
}

TEST(Report, StatusRules) {
  VerificationSuite s{"x", {}};
  s.check("x", "eq", 3, 3);
  EXPECT_TRUE(s.ok());
  EXPECT_EQ(s.bounded("x", "in", 2, -1, 5).status, Status::bounded);
  EXPECT_EQ(s.bounded("x", "in", 2, 4, 4).status, Status::bounded);
  EXPECT_TRUE(s.ok());
  EXPECT_EQ(s.bounded("x", "out", 6, 9, 5).status, Status::fail);
  EXPECT_FALSE(s.ok());
  EXPECT_EQ(s.check("x", "ne", json{1, 2}, json{2, 1}).status, Status::fail);
}

TEST(Report, JsonCsvText) {
  VerificationSuite s{"demo", {}};
  s.check("demo", "one, \"two\"", 1, 1);
  EXPECT_EQ(emit(s, Format::json),
            "{\"claims\":[{\"anchor\":\"demo\",\"computed\":1,\"expected\":1,\"name\":\"one, \\\"two\\\"\","
            "\"status\":\"pass\"}],\"id\":\"demo\"}\n");
  EXPECT_EQ(emit(s, Format::csv),
            "id,anchor,name,status,computed,expected\ndemo,\"demo\",\"one, \"\"two\"\"\",pass,\"1\",\"1\"\n");
  EXPECT_NE(emit(s, Format::text).find("[pass] demo"), std::string::npos);
  EXPECT_THROW(parse_format("xml"), Error);
}

TEST(Report, SweepCsvRow) {
  std::string csv = emit(sweep_remark68(5, 7), Format::csv);
  EXPECT_EQ(csv, "n,all_i_coprime_checked,eq_holds_for_all_i,star_witnesses\n5,true,true,\"\"\n7,true,false,\"3\"\n");
}

TEST(Report, InvariantReport) {
  auto r = make_report("min_delta", 2, "formula", 14);
  r.inputs = {{"n", 7}};
  EXPECT_EQ(emit(r, Format::json), "{\"bound\":14,\"inputs\":{\"n\":7},\"method\":\"formula\",\"name\":\"min_delta\",\"value\":2}\n");
}

TEST(Suites, RegistryIsComplete) {
  std::vector<std::string> ids;
  for (const auto& [id, fn] : suite_registry()) ids.push_back(id);
  EXPECT_EQ(ids.size(), 18u);
  EXPECT_THROW(run_suite("no-such-suite"), Error);
  try {
    run_suite("no-such-suite");
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "usage");
  }
}

TEST(Suites, FastSuitesPassAndAreDeterministic) {
  for (const char* id : {"atoms-lemma-5.2", "maxatoms-prop-2.4", "lengths-thm-5.1", "davenport-prop-2.3",
                         "deltastar-thm-6.6", "deltastarrho-thm-6.7", "rk-lambda-prop-6.0", "halffact-lemma-6.2",
                         "transfer-lemma-6.4", "types-lemma-6.7", "divis-prop-6.5", "witness-lemma-3.2",
                         "closure-prop-3.1", "kneser-random", "pi-equivalence"}) {
    VerificationSuite a = run_suite(id);
    EXPECT_TRUE(a.ok()) << emit(a, Format::text);
    for (const auto& c : a.claims) EXPECT_EQ(c.anchor, id);
    EXPECT_EQ(emit(run_suite(id), Format::json), emit(a, Format::json)) << id;
  }
}

TEST(Suites, SweepSuiteSmallRange) {
  SuiteParams p;
  p.from = 5;
  p.to = 200;
  p.threads = 3;
  VerificationSuite s = run_suite("sweep-remark-6.8", p);
  EXPECT_TRUE(s.ok()) << emit(s, Format::text);
}

TEST(Suites, ParamsOverride) {
  SuiteParams p;
  p.ns = {3};
  VerificationSuite s = run_suite("atoms-lemma-5.2", p);
  EXPECT_EQ(s.claims.size(), 3u);
  EXPECT_EQ(s.claims[0].computed, 12);
}

TEST(Io, TableFile) {
  std::string path = ::testing::TempDir() + "zs_c2.json";
  {
    std::ofstream out(path);
    out << "{\"order\": 2, \"table\": [[0, 1], [1, 0]]}";
  }
  auto g = parse_group("table:" + path);
  EXPECT_EQ(g->order(), 2);
  EXPECT_EQ(davenport_constants(g, {0, 1}).D, 2);
  {
    std::ofstream out(path);
    out << "{\"order\": 3, \"table\": [[0, 1], [1, 0]]}";
  }
  EXPECT_THROW(parse_group("table:" + path), Error);
  std::remove(path.c_str());
}

TEST(Io, Cache) {
  std::string dir = ::testing::TempDir() + "zs_cache_test";
  std::filesystem::remove_all(dir);
  ReportCache c(dir);
  EXPECT_FALSE(c.get("k").has_value());
  c.put("k", "body\n");
  EXPECT_EQ(c.get("k").value(), "body\n");
  EXPECT_FALSE(c.get("other").has_value());
  EXPECT_EQ(fnv1a(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(fnv1a("a"), 0xaf63dc4c8601ec8cULL);
  std::filesystem::remove_all(dir);
}
