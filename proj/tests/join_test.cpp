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

#include "grafts/join.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

#include "fixtures.hpp"
#include "grafts/detail/weighted_matching.hpp"
#include "grafts/generate.hpp"
#include "grafts/oracle.hpp"

namespace grafts {
namespace {

using testing::i1;
using testing::i2;
using testing::i3;
using testing::i4;

// nu by a subset DP over terminal pairings with breadth-first distances.
// Shares nothing with the library besides the graph container.
std::optional<int> nu_by_pairing_dp(const Graft& g) {
  const Multigraph& graph = g.graph();
  std::vector<std::size_t> terminals;
  for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
    if (g.terminal_mask()[v]) terminals.push_back(v);
  }
  const std::size_t k = terminals.size();
  constexpr int kInf = std::numeric_limits<int>::max() / 4;
  std::vector<std::vector<int>> d(k, std::vector<int>(k, kInf));
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<int> dist(graph.vertex_count(), kInf);
    std::queue<std::size_t> q;
    dist[terminals[i]] = 0;
    q.push(terminals[i]);
    while (!q.empty()) {
      std::size_t x = q.front();
      q.pop();
      for (const Incidence& inc : graph.incidences(x)) {
        if (dist[inc.other] == kInf) {
          dist[inc.other] = dist[x] + 1;
          q.push(inc.other);
        }
      }
    }
    for (std::size_t j = 0; j < k; ++j) d[i][j] = dist[terminals[j]];
  }
  std::vector<int> best(std::size_t{1} << k, kInf);
  best[0] = 0;
  for (std::size_t s = 1; s < best.size(); ++s) {
    std::size_t i = static_cast<std::size_t>(__builtin_ctzll(s));
    for (std::size_t j = i + 1; j < k; ++j) {
      if (!((s >> j) & 1U) || d[i][j] == kInf) continue;
      std::size_t rest = s & ~(std::size_t{1} << i) & ~(std::size_t{1} << j);
      if (best[rest] != kInf) best[s] = std::min(best[s], best[rest] + d[i][j]);
    }
  }
  if (best.back() == kInf) return std::nullopt;
  return best.back();
}

TEST(MinJoinBruteforce, ReferenceInstances) {
  EXPECT_EQ(min_join_bruteforce(i1().graft()).edges(), (EdgeSet{"e"}));
  EXPECT_EQ(min_join_bruteforce(i2().graft()).edges(), (EdgeSet{"f2", "f3"}));
  EXPECT_EQ(min_join_bruteforce(i3().graft()).edges(), (EdgeSet{"e0", "e1"}));
}

TEST(MinJoinBruteforce, CapacityBound) {
  EXPECT_GRAFT_ERROR(min_join_bruteforce(i2().graft(), 3), ErrorKind::kCapacity);
}

TEST(MinJoin, ReferenceSizes) {
  EXPECT_EQ(min_join(i1().graft()).size(), 1U);
  EXPECT_EQ(min_join(i2().graft()).size(), 2U);
  EXPECT_EQ(nu(i1().graft()), 1);
  EXPECT_EQ(nu(i2().graft()), 2);
  EXPECT_EQ(nu(Graft(i2().graph(), {})), 0);
  EXPECT_EQ(nu(Graft(Multigraph({}, {}), {})), 0);
}

TEST(MinJoin, Seed7TwelveVertices) {
  GenConfig cfg;
  cfg.seed = 7;
  cfg.min_vertices = cfg.max_vertices = 12;
  Graft g = gen_random_graft(cfg);
  EXPECT_EQ(min_join(g).size(), min_join_bruteforce(g).size());
}

TEST(MinJoin, AgreesWithPairingDpAndEnumeration) {
  Rng rng(2024);
  GenConfig cfg;
  cfg.max_vertices = 12;
  for (int trial = 0; trial < 300; ++trial) {
    Graft g = gen_random_graft(rng, cfg);
    JoinSet fast = min_join(g);
    auto dp = nu_by_pairing_dp(g);
    ASSERT_TRUE(dp.has_value());
    EXPECT_EQ(static_cast<int>(fast.size()), *dp);
    EXPECT_EQ(fast.size(), min_join_bruteforce(g).size());
    EXPECT_TRUE(is_join(g, fast.edges()));
  }
}

TEST(MinJoin, BruteForceBackendSwitch) {
  EngineConfig config = engine_config();
  config.backend = JoinBackend::kBruteForce;
  ScopedEngineConfig scoped(config);
  EXPECT_EQ(min_join(i2().graft()).edges(), (EdgeSet{"f2", "f3"}));
}

TEST(WeightedMatching, MatchesExhaustivePairing) {
  Rng rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 * (1 + rng.index(5));
    std::vector<std::vector<std::int64_t>> cost(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) cost[i][j] = cost[j][i] = static_cast<std::int64_t>(rng.uniform(0, 9));
    }
    std::vector<int> mate = detail::min_weight_perfect_matching(cost);
    std::int64_t got = 0;
    for (std::size_t i = 0; i < n; ++i) {
      ASSERT_EQ(static_cast<std::size_t>(mate[static_cast<std::size_t>(mate[i])]), i);
      if (static_cast<std::size_t>(mate[i]) > i) got += cost[i][static_cast<std::size_t>(mate[i])];
    }
    std::vector<std::int64_t> best(std::size_t{1} << n, std::numeric_limits<std::int64_t>::max());
    best[0] = 0;
    for (std::size_t s = 1; s < best.size(); ++s) {
      std::size_t i = static_cast<std::size_t>(__builtin_ctzll(s));
      for (std::size_t j = i + 1; j < n; ++j) {
        std::size_t rest = s & ~(std::size_t{1} << i) & ~(std::size_t{1} << j);
        if (((s >> j) & 1U) && best[rest] != std::numeric_limits<std::int64_t>::max()) {
          best[s] = std::min(best[s], best[rest] + cost[i][j]);
        }
      }
    }
    EXPECT_EQ(got, best.back());
  }
}

TEST(FWeight, Examples) {
  EXPECT_EQ(f_weight(EdgeSet{"e"}, EdgeSet{"e"}), -1);
  EXPECT_EQ(f_weight(EdgeSet{"f1", "f4"}, EdgeSet{"f1", "f2", "f3", "f4"}), 0);
  EXPECT_EQ(f_weight(EdgeSet{"f1", "f4"}, EdgeSet{}), 0);
}

TEST(IsMinimumJoin, Examples) {
  EXPECT_TRUE(is_minimum_join(i3().graft(), {"e0", "e1"}));
  EXPECT_TRUE(is_minimum_join(i1().graft(), {"e"}));
  Graft c4(i2().graph(), {"v1", "v2"});
  EXPECT_FALSE(is_minimum_join(c4, {"f2", "f3", "f4"}));
  auto circuit = find_negative_circuit(c4, {"f2", "f3", "f4"});
  ASSERT_TRUE(circuit.has_value());
  EXPECT_LT(circuit->weight, 0);
  EXPECT_TRUE(circuit->is_circuit());
  EXPECT_FALSE(find_negative_circuit(c4, {"f1"}).has_value());
}

TEST(IsMinimumJoin, NonJoinIsPreconditionError) {
  EXPECT_GRAFT_ERROR(is_minimum_join(i2().graft(), {"f1"}), ErrorKind::kPrecondition);
}

TEST(FDistance, Examples) {
  EXPECT_EQ(f_distance(i1().graft(), "a", "b").value, -1);
  EXPECT_EQ(f_distance(i2().graft(), "v2", "v4").value, -2);
  EXPECT_EQ(f_distance(i2().graft(), "v1", "v3").value, 0);
  EXPECT_EQ(f_distance(i2().graft(), "v3", "v3").value, 0);
}

TEST(FDistance, Unreachable) {
  Graft g(Multigraph({"a", "b", "c", "d"}, {{"e", "a", "b"}, {"f", "c", "d"}}), {"a", "b"});
  Distance d = f_distance(g, "a", "c");
  EXPECT_FALSE(d.reachable());
  EXPECT_EQ(to_string(d), "unreachable");
  EXPECT_GRAFT_ERROR(extract_shortest_path(g, min_join(g), "a", "c"), ErrorKind::kPrecondition);
}

TEST(FDistance, FlipHookNegates) {
  EngineConfig config = engine_config();
  config.flip_distance_sign = true;
  ScopedEngineConfig scoped(config);
  EXPECT_EQ(f_distance(i1().graft(), "a", "b").value, 1);
}

TEST(FDistance, MatchesPathOracle) {
  Rng rng(5);
  GenConfig cfg;
  cfg.max_vertices = 9;
  cfg.connected = true;
  for (int trial = 0; trial < 100; ++trial) {
    Graft g = gen_random_graft(rng, cfg);
    const Multigraph& graph = g.graph();
    for (std::uint64_t bits : oracle::all_minimum_joins(graph, g.terminal_mask())) {
      IndexMask f = detail::mask_from_bits(bits, graph.edge_count());
      for (std::size_t u = 0; u < graph.vertex_count(); ++u) {
        for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
          EXPECT_EQ(f_distance(g, graph.vertex(u), graph.vertex(v)).value, oracle::min_path_weight(graph, f, u, v));
        }
      }
    }
  }
}

TEST(ExtractShortestPath, Examples) {
  WeightedWalkReport p = extract_shortest_path(i1().graft(), JoinSet(i1().graft(), {"e"}), "a", "b");
  EXPECT_EQ(p.vertices, (std::vector<VertexId>{"a", "b"}));
  EXPECT_EQ(p.edges, (std::vector<EdgeId>{"e"}));
  EXPECT_EQ(p.weight, -1);
  p = extract_shortest_path(i2().graft(), JoinSet(i2().graft(), {"f1", "f4"}), "v2", "v4");
  EXPECT_EQ(p.vertices, (std::vector<VertexId>{"v2", "v1", "v4"}));
  EXPECT_EQ(p.weight, -2);
  p = extract_shortest_path(i4().graft(), JoinSet(i4().graft(), {"e1"}), "b1", "r");
  EXPECT_EQ(p.vertices, (std::vector<VertexId>{"b1", "a1", "r"}));
  EXPECT_EQ(p.weight, 0);
}

TEST(ExtractShortestPath, RequiresMinimumJoin) {
  Graft c4(i2().graph(), {"v1", "v2"});
  EXPECT_GRAFT_ERROR(extract_shortest_path(c4, JoinSet(c4, {"f2", "f3", "f4"}), "v1", "v3"),
                     ErrorKind::kPrecondition);
}

TEST(JoinSet, RejectsNonJoin) { EXPECT_GRAFT_ERROR(JoinSet(i2().graft(), {"f1"}), ErrorKind::kPrecondition); }

TEST(IsAllowedEdge, Examples) {
  EXPECT_TRUE(is_allowed_edge(i1().graft(), "e"));
  EXPECT_FALSE(is_allowed_edge(i3().graft(), "c"));
  EXPECT_TRUE(is_allowed_edge(i2().graft(), "f1"));
}

TEST(IsAllowedEdge, MatchesUnionOfMinimumJoins) {
  Rng rng(11);
  GenConfig cfg;
  cfg.max_vertices = 10;
  for (int trial = 0; trial < 200; ++trial) {
    Graft g = gen_random_graft(rng, cfg);
    IndexMask expected = oracle::allowed_edges(g.graph(), g.terminal_mask());
    for (std::size_t e = 0; e < g.graph().edge_count(); ++e) {
      EXPECT_EQ(is_allowed_edge(g, g.graph().edge(e).id), static_cast<bool>(expected[e]));
    }
  }
}

}  // namespace
}  // namespace grafts
