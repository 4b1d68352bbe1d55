// Copyright 2026 The Grafts Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <string>

#include "fixtures.hpp"
#include "grafts/grafts.hpp"

namespace grafts {
namespace {

using testing::data_path;
using testing::i1;
using testing::i2;
using testing::i3;
using testing::read_file;

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) ++n;
  return n;
}

TEST(ParseGraftJson, Fixtures) {
  EXPECT_TRUE(*parse_graft_json(read_file(data_path("i1.json"))).bipartite == i1());
  EXPECT_TRUE(*parse_graft_json(read_file(data_path("i2.json"))).bipartite == i2());
  EXPECT_TRUE(*parse_graft_json(read_file(data_path("i3.json"))).bipartite == i3());
  EXPECT_TRUE(*parse_graft_json(read_file(data_path("i4.json"))).bipartite == testing::i4());
}

TEST(ParseGraftJson, MinimalPlainGraft) {
  ParsedGraft p = parse_graft_json(R"({"vertices":["a","b"],"edges":[{"id":"e","u":"a","v":"b"}],"terminals":["a","b"]})");
  EXPECT_FALSE(p.bipartite.has_value());
  EXPECT_TRUE(p.graft == i1().graft());
}

TEST(ParseGraftJson, RoundTrip) {
  OrderedBipartiteGraft g = i2();
  EXPECT_TRUE(*parse_graft_json(serialize_graft(g)).bipartite == g);
  EXPECT_EQ(serialize_graft(*parse_graft_json(serialize_graft(g)).bipartite), serialize_graft(g));
  Graft plain = i3().graft();
  EXPECT_TRUE(parse_graft_json(serialize_graft(plain)).graft == plain);
}

TEST(ParseGraftJson, Diagnostics) {
  try {
    parse_graft_json(read_file(data_path("unknown_terminal.json")));
    FAIL();
  } catch (const GraftError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInput);
    EXPECT_NE(std::string(e.what()).find("terminals[1]"), std::string::npos);
  }
  try {
    parse_graft_json(read_file(data_path("malformed.json")));
    FAIL();
  } catch (const GraftError& e) {
    EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos);
  }
  EXPECT_GRAFT_ERROR(parse_graft_json(R"({"vertices":["a"]})"), ErrorKind::kInput);
  EXPECT_GRAFT_ERROR(parse_graft_json(R"({"vertices":["a","a"],"edges":[]})"), ErrorKind::kInput);
  EXPECT_GRAFT_ERROR(parse_graft_json(R"({"vertices":["a"],"edges":[{"id":"e","u":"a","v":"q"}]})"),
                     ErrorKind::kInput);
  EXPECT_GRAFT_ERROR(parse_graft_json(R"({"vertices":["a","b"],"edges":[],"terminals":["a","b"]})"),
                     ErrorKind::kValidation);
}

TEST(ExportDot, PosetHasseEdges) {
  CombAnalysis a3(i3());
  std::string dot = export_dot(cathedral_poset(a3), a3.components());
  EXPECT_EQ(count(dot, "->"), 1U);
  EXPECT_NE(dot.find("\"a0\" -> \"a1\""), std::string::npos);
  CombAnalysis a1(i1());
  EXPECT_EQ(count(export_dot(cathedral_poset(a1), a1.components()), "->"), 0U);
}

TEST(ExportDot, Deterministic) {
  JoinSet f = min_join(i2().graft());
  EXPECT_EQ(export_dot(i2(), &f.edges()), export_dot(i2(), &f.edges()));
  EXPECT_EQ(count(export_dot(i2(), &f.edges()), "color=red"), 2U);
  GraftEarDecomposition d = build_graft_ear_decomposition(testing::i4(), "r", min_join(testing::i4().graft()));
  std::string dot = export_dot(d);
  EXPECT_NE(dot.find("e1 [2]"), std::string::npos);
  EXPECT_EQ(dot, export_dot(d));
}

TEST(Reports, CarrySchemaVersion) {
  Json j = to_json(cathedral_poset(i3()));
  EXPECT_EQ(j["schema_version"], kReportSchemaVersion);
  EXPECT_EQ(j["report"], "cathedral-poset");
  EXPECT_EQ(j["hasse"].size(), 1U);
}

TEST(GenRandomGraft, DeterministicAndValid) {
  GenConfig cfg;
  cfg.seed = 1;
  EXPECT_TRUE(gen_random_graft(cfg) == gen_random_graft(cfg));
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    cfg.seed = seed;
    Graft g = gen_random_graft(cfg);
    EXPECT_TRUE(validate_graft(g.graph(), g.terminals()));
  }
  cfg.seed = 2;
  cfg.min_vertices = cfg.max_vertices = 10;
  Graft g = gen_random_graft(cfg);
  EXPECT_EQ(g.graph().vertex_count(), 10U);
  EXPECT_EQ(nu(g), static_cast<int>(min_join_bruteforce(g).size()));
}

TEST(GenConfig, Validation) {
  GenConfig cfg;
  cfg.min_vertices = 5;
  cfg.max_vertices = 4;
  EXPECT_GRAFT_ERROR(cfg.validate(), ErrorKind::kInput);
  cfg = GenConfig{};
  cfg.retry_budget = 0;
  EXPECT_GRAFT_ERROR(cfg.validate(), ErrorKind::kInput);
}

TEST(GenRandomComb, Seed3FixtureAndBudget) {
  GenConfig cfg;
  cfg.seed = 3;
  cfg.mode = GenMode::kComb;
  Rng rng(cfg.seed);
  GeneratedComb c = gen_random_comb(rng, cfg);
  EXPECT_EQ(classify_comb(c.comb).kind, CombKind::kComb);
  EXPECT_GE(factor_components(c.comb.graft()).size(), 2U);
  EXPECT_TRUE(*parse_graft_json(read_file(data_path("comb_seed3.json"))).bipartite == c.comb);

  GenConfig hopeless = cfg;
  hopeless.max_vertices = 4;
  hopeless.min_components = 10;
  hopeless.max_components = 20;
  hopeless.retry_budget = 5;
  Rng rng2(1);
  EXPECT_GRAFT_ERROR(gen_random_comb(rng2, hopeless), ErrorKind::kCapacity);
}

TEST(PropertySuite, AllPropertiesPass) {
  GenConfig cfg;
  cfg.seed = 1;
  SuiteReport r = run_property_suite(100, cfg, {"all"});
  EXPECT_TRUE(r.ok());
  EXPECT_TRUE(r.certificates.empty());
  EXPECT_EQ(r.properties.size(), property_names().size());
  for (const PropertyStats& p : r.properties) {
    EXPECT_EQ(p.trials, 100U) << p.name;
    EXPECT_EQ(p.failures, 0U) << p.name;
    EXPECT_GT(p.checks, 0U) << p.name;
  }
  Json j = to_json(r);
  EXPECT_EQ(j["report"], "property-suite");
  EXPECT_EQ(j["ok"], true);
}

TEST(PropertySuite, Deterministic) {
  SuiteOptions options;
  options.trials = 10;
  SuiteReport a = run_property_suite(options, {"comb-kl", "circuits"});
  SuiteReport b = run_property_suite(options, {"comb-kl", "circuits"});
  ASSERT_EQ(a.properties.size(), 2U);
  for (std::size_t i = 0; i < 2; ++i) {
    EXPECT_EQ(a.properties[i].checks, b.properties[i].checks);
    EXPECT_EQ(a.properties[i].attempts, b.properties[i].attempts);
  }
}

TEST(PropertySuite, FlippedSignIsCaughtAndReplays) {
  SuiteOptions options;
  options.trials = 20;
  options.flip_distance_sign = true;
  SuiteReport r = run_property_suite(options, {"nonpositive-distance", "comb-distances"});
  EXPECT_FALSE(r.ok());
  ASSERT_FALSE(r.certificates.empty());
  for (const PropertyStats& p : r.properties) EXPECT_GT(p.failures, 0U) << p.name;
  Json cert = to_json(r)["certificates"][0];
  EXPECT_TRUE(cert["flip_distance_sign"].get<bool>());
  EXPECT_NO_THROW(graft_from_json(cert["instance"]));
  SuiteReport again = replay_certificate(cert);
  EXPECT_FALSE(again.ok());
  ASSERT_FALSE(again.certificates.empty());
  EXPECT_EQ(again.certificates[0].message, r.certificates[0].message);
  EXPECT_FALSE(engine_config().flip_distance_sign);
}

TEST(PropertySuite, SelectionErrors) {
  GenConfig cfg;
  EXPECT_GRAFT_ERROR(run_property_suite(1, cfg, {}), ErrorKind::kInput);
  EXPECT_GRAFT_ERROR(run_property_suite(1, cfg, {"no-such-property"}), ErrorKind::kInput);
}

}  // namespace
}  // namespace grafts
