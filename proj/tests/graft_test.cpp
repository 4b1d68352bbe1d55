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

#include "grafts/graft.hpp"

#include <gtest/gtest.h>

#include "fixtures.hpp"

namespace grafts {
namespace {

using testing::i1;
using testing::i2;
using testing::i3;
using testing::i4;
using testing::make;

TEST(ValidateGraft, EvenTerminalsPerComponent) {
  EXPECT_TRUE(validate_graft(i1().graph(), {"a", "b"}));
  EXPECT_TRUE(validate_graft(i3().graph(), {"a0", "b0", "a1", "b1"}));
  Multigraph isolated({"a", "b"}, {});
  EXPECT_FALSE(validate_graft(isolated, {"a", "b"}));
  EXPECT_TRUE(validate_graft(isolated, {}));
}

TEST(ValidateGraft, UnknownTerminalIsInputError) {
  EXPECT_GRAFT_ERROR(validate_graft(i1().graph(), {"a", "z"}), ErrorKind::kInput);
}

TEST(Multigraph, RejectsSelfLoopsAndDuplicates) {
  EXPECT_GRAFT_ERROR(Multigraph({"a"}, {{"e", "a", "a"}}), ErrorKind::kValidation);
  EXPECT_GRAFT_ERROR(Multigraph({"a", "a"}, {}), ErrorKind::kValidation);
  EXPECT_GRAFT_ERROR(Multigraph({"a", "b"}, {{"e", "a", "b"}, {"e", "b", "a"}}), ErrorKind::kValidation);
  EXPECT_GRAFT_ERROR(Multigraph({"a"}, {{"e", "a", "b"}}), ErrorKind::kValidation);
}

TEST(Multigraph, KeepsParallelEdges) {
  Multigraph g({"a", "b"}, {{"e", "a", "b"}, {"f", "b", "a"}});
  EXPECT_EQ(g.edge_count(), 2U);
  EXPECT_EQ(g.incidences(g.vertex_index("a")).size(), 2U);
}

TEST(Graft, OddComponentRejected) {
  EXPECT_GRAFT_ERROR(Graft(Multigraph({"a", "b"}, {}), {"a", "b"}), ErrorKind::kValidation);
}

TEST(Graft, EmptyGraphIsAGraft) {
  Graft g(Multigraph({}, {}), {});
  EXPECT_EQ(g.graph().vertex_count(), 0U);
}

TEST(BuildBipartiteGraft, AcceptsI2) {
  OrderedBipartiteGraft g = i2();
  EXPECT_TRUE(g.spine().contains("v1"));
  EXPECT_TRUE(g.tooth().contains("v4"));
}

TEST(BuildBipartiteGraft, OverlapAndCoverage) {
  try {
    make({"v1", "v2", "v3", "v4"},
         {{"f1", "v1", "v2"}, {"f2", "v2", "v3"}, {"f3", "v3", "v4"}, {"f4", "v4", "v1"}}, {"v2", "v4"},
         {"v1", "v3"}, {"v1", "v3"});
    FAIL();
  } catch (const GraftError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kValidation);
    EXPECT_NE(std::string(e.what()).find("bipartition"), std::string::npos);
  }
}

TEST(BuildBipartiteGraft, TriangleIsNotBipartite) {
  try {
    make({"x", "y", "z"}, {{"p", "x", "y"}, {"q", "y", "z"}, {"s", "z", "x"}}, {}, {"x"}, {"y", "z"});
    FAIL();
  } catch (const GraftError& e) {
    EXPECT_NE(std::string(e.what()).find("not bipartite"), std::string::npos);
  }
}

TEST(BuildBipartiteGraft, OrderOfSidesMatters) {
  OrderedBipartiteGraft g = i1();
  OrderedBipartiteGraft swapped(g.graft(), g.tooth(), g.spine());
  EXPECT_FALSE(g == swapped);
}

TEST(RestrictGraft, InducedEdgesAndTerminals) {
  Graft sub = restrict_graft(i3().graft(), {"a0", "b0"});
  EXPECT_EQ(sub.graph().edge_count(), 1U);
  EXPECT_EQ(sub.terminals(), (VertexSet{"a0", "b0"}));
  Graft empty = restrict_graft(i3().graft(), {});
  EXPECT_EQ(empty.graph().vertex_count(), 0U);
}

TEST(ContractGraft, EvenIntersectionGivesI4) {
  Contraction c = contract_graft(i3().graft(), {"a0", "b0"}, "r");
  EXPECT_EQ(c.vertex, "r");
  EXPECT_TRUE(c.graft == i4().graft());
}

TEST(ContractGraft, OddIntersectionMakesTerminal) {
  Contraction c = contract_graft(i1().graft(), {"a"});
  EXPECT_EQ(c.vertex, "X#0");
  EXPECT_EQ(c.graft.terminals(), (VertexSet{"X#0", "b"}));
}

TEST(ContractGraft, EverythingToOneVertex) {
  Contraction c = contract_graft(i2().graft(), {"v1", "v2", "v3", "v4"});
  EXPECT_EQ(c.graft.graph().vertex_count(), 1U);
  EXPECT_EQ(c.graft.graph().edge_count(), 0U);
  EXPECT_TRUE(c.graft.terminals().empty());
}

TEST(ContractGraft, KeepsParallelEdges) {
  Contraction c = contract_graft(i2().graft(), {"v1", "v3"});
  EXPECT_EQ(c.graft.graph().edge_count(), 4U);
  EXPECT_EQ(c.graft.graph().incidences(c.graft.graph().vertex_index("v2")).size(), 2U);
}

TEST(ContractGraft, Errors) {
  EXPECT_GRAFT_ERROR(contract_graft(i1().graft(), {}), ErrorKind::kPrecondition);
  EXPECT_GRAFT_ERROR(contract_graft(i1().graft(), {"zz"}), ErrorKind::kInput);
  EXPECT_GRAFT_ERROR(contract_graft(i1().graft(), {"a"}, "b"), ErrorKind::kPrecondition);
}

TEST(GraftSum, BuildsI4FromTwoEars) {
  OrderedBipartiteGraft first = graft_sum(singleton_root("r"), make({"r", "a1"}, {{"c", "r", "a1"}}, {}, {"a1"}, {"r"}));
  EXPECT_EQ(first.graph().edge_count(), 1U);
  EXPECT_TRUE(first.terminals().empty());
  OrderedBipartiteGraft second =
      graft_sum(first, make({"a1", "b1"}, {{"e1", "a1", "b1"}}, {"a1", "b1"}, {"a1"}, {"b1"}));
  EXPECT_TRUE(second == i4());
}

TEST(GraftSum, SelfSumClearsTerminals) {
  OrderedBipartiteGraft s = graft_sum(i3(), i3());
  EXPECT_TRUE(s.graph() == i3().graph());
  EXPECT_TRUE(s.terminals().empty());
}

TEST(GraftSum, SideClash) {
  OrderedBipartiteGraft g = i1();
  OrderedBipartiteGraft swapped(Graft(g.graph(), {}), g.tooth(), g.spine());
  EXPECT_GRAFT_ERROR(graft_sum(g, swapped), ErrorKind::kPrecondition);
}

TEST(IsJoin, ParityAtEveryVertex) {
  EXPECT_TRUE(is_join(i1().graft(), {"e"}));
  EXPECT_TRUE(is_join(i2().graft(), {"f1", "f4"}));
  EXPECT_FALSE(is_join(i2().graft(), {"f1"}));
  EXPECT_GRAFT_ERROR(is_join(i2().graft(), {"nope"}), ErrorKind::kInput);
}

}  // namespace
}  // namespace grafts
