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

#include "grafts/cathedral.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <vector>

#include "fixtures.hpp"
#include "grafts/generate.hpp"

namespace grafts {
namespace {

using testing::i1;
using testing::i2;
using testing::i3;
using testing::make;

const VertexSet kI3All{"a0", "b0", "a1", "b1"};

TEST(IsCriticalSet, Examples) {
  CriticalSetResult whole = is_critical_set(i3(), "a0", kI3All);
  EXPECT_TRUE(whole.critical);
  ASSERT_TRUE(whole.certificate.contracted.has_value());
  EXPECT_TRUE(whole.certificate.contracted->tooth().contains(whole.certificate.root));
  EXPECT_EQ(whole.certificate.distance_to_root.at("a1").value, 1);
  EXPECT_EQ(whole.certificate.distance_to_root.at("b1").value, 0);
  EXPECT_EQ(whole.certificate.witness, (std::vector<ComponentId>{"a0", "a1"}));

  EXPECT_TRUE(is_critical_set(i3(), "a0", {"a0", "b0"}).critical);
  EXPECT_FALSE(is_critical_set(i3(), "a1", kI3All).critical);
  EXPECT_FALSE(is_critical_set(i3(), "a0", {"a0", "a1"}).critical);
  EXPECT_FALSE(is_critical_set(i3(), "a1", {"a0", "b0"}).critical);
}

TEST(IsCriticalSet, Errors) {
  EXPECT_GRAFT_ERROR(is_critical_set(testing::i4(), "r", {"r"}), ErrorKind::kPrecondition);
  EXPECT_GRAFT_ERROR(is_critical_set(i3(), "zz", kI3All), ErrorKind::kInput);
}

TEST(EnumerateCriticalSets, Examples) {
  CombAnalysis a3(i3());
  EXPECT_EQ(enumerate_critical_sets(a3, "a0"), (std::vector<std::vector<ComponentId>>{{"a0"}, {"a0", "a1"}}));
  EXPECT_EQ(enumerate_critical_sets(a3, "a1"), (std::vector<std::vector<ComponentId>>{{"a1"}}));
  EXPECT_EQ(vertices_of(a3, {"a0", "a1"}), kI3All);
  CombAnalysis a1(i1());
  EXPECT_EQ(enumerate_critical_sets(a1, "a"), (std::vector<std::vector<ComponentId>>{{"a"}}));
  EXPECT_GRAFT_ERROR(enumerate_critical_sets(a3, "a0", 1), ErrorKind::kCapacity);
}

TEST(Precedes, Examples) {
  EXPECT_TRUE(precedes(i3(), "a0", "a1"));
  EXPECT_FALSE(precedes(i3(), "a1", "a0"));
  EXPECT_TRUE(precedes(i3(), "a0", "a0"));
}

TEST(CathedralPoset, I3) {
  CathedralPoset p = cathedral_poset(i3());
  EXPECT_EQ(p.ids, (std::vector<ComponentId>{"a0", "a1"}));
  EXPECT_TRUE(p.leq("a0", "a0"));
  EXPECT_TRUE(p.leq("a1", "a1"));
  EXPECT_TRUE(p.leq("a0", "a1"));
  EXPECT_FALSE(p.leq("a1", "a0"));
  EXPECT_EQ(p.hasse, (std::vector<std::pair<ComponentId, ComponentId>>{{"a0", "a1"}}));
  EXPECT_EQ(p.heights.at("a0"), 1);
  EXPECT_EQ(p.heights.at("a1"), 2);
}

TEST(CathedralPoset, SingleComponent) {
  for (const OrderedBipartiteGraft& g : {i1(), i2()}) {
    CathedralPoset p = cathedral_poset(g);
    EXPECT_EQ(p.ids.size(), 1U);
    EXPECT_TRUE(p.hasse.empty());
    EXPECT_EQ(p.heights.at(p.ids.front()), 1);
  }
}

// Independent criterion: X is critical for G0 iff every spine vertex of
// X \ V(G0) reaches V(G0) by a path of weight 1, and every tooth vertex by
// one of weight 0, running inside X \ V(G0) until its last vertex.
bool critical_by_paths(const OrderedBipartiteGraft& g, const IndexMask& join, const VertexSet& base,
                       const VertexSet& x) {
  const Multigraph& graph = g.graph();
  for (const VertexId& start : x) {
    if (base.contains(start)) continue;
    const int wanted = g.spine().contains(start) ? 1 : 0;
    bool found = false;
    std::vector<char> on(graph.vertex_count(), 0);
    std::function<void(std::size_t, int)> dfs = [&](std::size_t v, int weight) {
      for (const Incidence& inc : graph.incidences(v)) {
        if (found) return;
        const VertexId& next = graph.vertex(inc.other);
        if (on[inc.other] || !x.contains(next)) continue;
        int w = weight + (join[inc.edge] ? -1 : 1);
        if (base.contains(next)) {
          if (w == wanted) found = true;
          continue;
        }
        on[inc.other] = 1;
        dfs(inc.other, w);
        on[inc.other] = 0;
      }
    };
    std::size_t s = graph.vertex_index(start);
    on[s] = 1;
    dfs(s, 0);
    if (!found) return false;
  }
  return true;
}

TEST(IsCriticalSet, AgreesWithPathCharacterisation) {
  Rng rng(23);
  GenConfig cfg;
  cfg.mode = GenMode::kComb;
  cfg.max_vertices = 9;
  cfg.min_components = 2;
  cfg.max_components = 5;
  cfg.retry_budget = 20000;
  std::size_t critical = 0, total = 0;
  for (int trial = 0; trial < 60; ++trial) {
    GeneratedComb gc = gen_random_comb(rng, cfg);
    CombAnalysis analysis(gc.comb);
    const auto& comps = analysis.components().components();
    const std::size_t k = comps.size();
    for (std::size_t b = 0; b < k; ++b) {
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << k); ++bits) {
        if (!((bits >> b) & 1U)) continue;
        VertexSet x = detail::union_of(analysis.components(), bits);
        bool expected = critical_by_paths(gc.comb, gc.join.mask(), comps[b].vertices, x);
        EXPECT_EQ(is_critical_set(analysis, comps[b].id, x).critical, expected);
        critical += expected ? 1 : 0;
        ++total;
      }
    }
  }
  EXPECT_GT(critical, 0U);
  EXPECT_LT(critical, total);
}

TEST(UnionCriticalityCheck, Examples) {
  CombAnalysis a3(i3());
  EXPECT_TRUE(union_criticality_check(a3, "a0", "a1", "a1", kI3All, {"a1", "b1"}).ok);
  EXPECT_TRUE(union_criticality_check(a3, "a0", "a0", "a0", {"a0", "b0"}, {"a0", "b0"}).ok);
  UnionCheck bad = union_criticality_check(a3, "a1", "a0", "a0", kI3All, {"a0", "b0"});
  EXPECT_FALSE(bad.ok);
  EXPECT_NE(bad.reason.find("precondition"), std::string::npos);
}

TEST(UpperBoundCheck, Examples) {
  CombAnalysis a3(i3());
  UpperBoundReport r = upper_bound_check(a3, "a0");
  EXPECT_TRUE(r.ok);
  ASSERT_EQ(r.pairs.size(), 1U);
  EXPECT_EQ(r.pairs[0].component, (VertexSet{"a1", "b1"}));
  EXPECT_EQ(r.pairs[0].neighbours, (VertexSet{"b0"}));
  EXPECT_EQ(r.pairs[0].kl_class, (VertexSet{"b0"}));
  UpperBoundReport top = upper_bound_check(a3, "a1");
  EXPECT_TRUE(top.ok);
  EXPECT_TRUE(top.upper.empty());
  CombAnalysis a2(i2());
  EXPECT_TRUE(upper_bound_check(a2, "v1").upper.empty());
}

TEST(RoundEarBondCheck, CircuitThroughOneVertex) {
  // I3 with a spine vertex hung on b0 by two parallel edges.
  OrderedBipartiteGraft g = make({"a0", "b0", "a1", "b1", "a2"},
                                 {{"e0", "a0", "b0"}, {"c", "b0", "a1"}, {"e1", "a1", "b1"}, {"g", "b0", "a2"},
                                  {"h", "a2", "b0"}},
                                 {"a0", "b0", "a1", "b1"}, {"a0", "a1", "a2"}, {"b0", "b1"});
  CombAnalysis analysis(g);
  WeightedWalkReport ear;
  ear.vertices = {"b0", "a2"};
  ear.edges = {"g", "h"};
  RoundEarBondCheck check = round_ear_bond_check(analysis, JoinSet(g.graft(), {"e0", "e1"}), "a0", ear);
  EXPECT_TRUE(check.ok);
  EXPECT_EQ(check.s, "b0");
  EXPECT_EQ(check.t, "b0");
  EXPECT_EQ(check.distance.value, 0);
}

TEST(RoundEarBondCheck, RejectsNonRoundEar) {
  CombAnalysis a3(i3());
  WeightedWalkReport straight;
  straight.vertices = {"b0", "a1", "b1"};
  straight.edges = {"c", "e1"};
  EXPECT_GRAFT_ERROR(round_ear_bond_check(a3, JoinSet(i3().graft(), {"e0", "e1"}), "a0", straight),
                     ErrorKind::kPrecondition);
}

TEST(CombAnalysis, RejectsNonComb) { EXPECT_GRAFT_ERROR(CombAnalysis(testing::i4()), ErrorKind::kPrecondition); }

}  // namespace
}  // namespace grafts
