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

// Index-level join machinery shared by the public join engine: component
// labelling and BFS restricted to an active edge subset, the matching-based
// minimum join, and exhaustive join enumeration over the cycle space.

#ifndef GRAFTS_DETAIL_JOIN_SEARCH_HPP_
#define GRAFTS_DETAIL_JOIN_SEARCH_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <vector>

#include "grafts/detail/weighted_matching.hpp"
#include "grafts/graft.hpp"

namespace grafts::detail {

inline constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// nullptr means every edge is active.
using EdgeFilter = const IndexMask*;

inline bool active(EdgeFilter filter, std::size_t e) { return filter == nullptr || (*filter)[e]; }

inline std::vector<std::size_t> component_labels(const Multigraph& graph, EdgeFilter filter) {
  if (filter == nullptr) return graph.component_labels();
  std::vector<std::size_t> label(graph.vertex_count(), kNone);
  std::size_t next = 0;
  std::vector<std::size_t> stack;
  for (std::size_t s = 0; s < graph.vertex_count(); ++s) {
    if (label[s] != kNone) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      std::size_t x = stack.back();
      stack.pop_back();
      for (const Incidence& inc : graph.incidences(x)) {
        if (active(filter, inc.edge) && label[inc.other] == kNone) {
          label[inc.other] = next;
          stack.push_back(inc.other);
        }
      }
    }
    ++next;
  }
  return label;
}

inline bool has_even_parity(const Multigraph& graph, const IndexMask& terminals, EdgeFilter filter) {
  std::vector<std::size_t> label = component_labels(graph, filter);
  std::vector<char> odd(graph.vertex_count(), 0);
  for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
    if (terminals[v]) odd[label[v]] ^= 1;
  }
  for (char c : odd) {
    if (c) return false;
  }
  return true;
}

struct BfsTree {
  std::vector<std::size_t> dist;         // kNone when unreachable
  std::vector<std::size_t> parent_edge;  // kNone at the source
};

// Breadth-first search scanning incidences in edge-index order, so the tree
// is a deterministic function of the graph.
inline BfsTree bfs(const Multigraph& graph, std::size_t source, EdgeFilter filter) {
  BfsTree tree{std::vector<std::size_t>(graph.vertex_count(), kNone),
               std::vector<std::size_t>(graph.vertex_count(), kNone)};
  std::deque<std::size_t> queue{source};
  tree.dist[source] = 0;
  while (!queue.empty()) {
    std::size_t x = queue.front();
    queue.pop_front();
    for (const Incidence& inc : graph.incidences(x)) {
      if (!active(filter, inc.edge) || tree.dist[inc.other] != kNone) continue;
      tree.dist[inc.other] = tree.dist[x] + 1;
      tree.parent_edge[inc.other] = inc.edge;
      queue.push_back(inc.other);
    }
  }
  return tree;
}

// Minimum join through the terminal metric: per component, shortest-path
// distances among terminals, a minimum-weight perfect matching on them, and
// the symmetric difference of the realising shortest paths. nullopt iff the
// terminal set has odd parity on some component.
inline std::optional<IndexMask> min_join_by_matching(const Multigraph& graph, const IndexMask& terminals,
                                                     EdgeFilter filter) {
  std::vector<std::size_t> label = component_labels(graph, filter);
  std::vector<std::vector<std::size_t>> groups(graph.vertex_count());
  for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
    if (terminals[v]) groups[label[v]].push_back(v);
  }
  IndexMask join(graph.edge_count(), 0);
  for (const auto& group : groups) {
    if (group.size() % 2 != 0) return std::nullopt;
    if (group.empty()) continue;
    const std::size_t k = group.size();
    std::vector<BfsTree> trees;
    trees.reserve(k);
    std::vector<std::vector<std::int64_t>> cost(k, std::vector<std::int64_t>(k, 0));
    for (std::size_t i = 0; i < k; ++i) {
      trees.push_back(bfs(graph, group[i], filter));
      for (std::size_t j = 0; j < k; ++j) {
        cost[i][j] = static_cast<std::int64_t>(trees[i].dist[group[j]]);
      }
    }
    std::vector<int> mate = min_weight_perfect_matching(cost);
    for (std::size_t i = 0; i < k; ++i) {
      std::size_t j = static_cast<std::size_t>(mate[i]);
      if (j < i) continue;
      std::size_t x = group[j];
      while (x != group[i]) {
        std::size_t e = trees[i].parent_edge[x];
        join[e] ^= 1;
        x = graph.opposite(e, x);
      }
    }
  }
  return join;
}

// Every join of (G, T) is one fixed join plus an element of the cycle space;
// this holds a spanning-forest join and a basis of fundamental circuits, as
// bit masks over edge indices.
struct JoinSpace {
  std::uint64_t base = 0;
  std::vector<std::uint64_t> circuits;
};

inline std::optional<JoinSpace> join_space(const Multigraph& graph, const IndexMask& terminals,
                                           EdgeFilter filter) {
  if (graph.edge_count() > 64) {
    throw GraftError(ErrorKind::kCapacity, "exhaustive join search is limited to 64 edges");
  }
  const std::size_t n = graph.vertex_count();
  std::vector<std::size_t> parent_edge(n, kNone);
  std::vector<std::size_t> depth(n, kNone);
  std::vector<std::size_t> order;
  IndexMask tree_edge(graph.edge_count(), 0);
  for (std::size_t s = 0; s < n; ++s) {
    if (depth[s] != kNone) continue;
    depth[s] = 0;
    std::size_t head = order.size();
    order.push_back(s);
    while (head < order.size()) {
      std::size_t x = order[head++];
      for (const Incidence& inc : graph.incidences(x)) {
        if (!active(filter, inc.edge) || depth[inc.other] != kNone) continue;
        depth[inc.other] = depth[x] + 1;
        parent_edge[inc.other] = inc.edge;
        tree_edge[inc.edge] = 1;
        order.push_back(inc.other);
      }
    }
  }
  JoinSpace space;
  std::vector<char> demand(terminals.begin(), terminals.end());
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    std::size_t x = *it;
    if (!demand[x]) continue;
    if (parent_edge[x] == kNone) return std::nullopt;
    space.base ^= std::uint64_t{1} << parent_edge[x];
    demand[graph.opposite(parent_edge[x], x)] ^= 1;
  }
  // Tree path masks from each root, so a fundamental circuit is
  // root_path[u] ^ root_path[v] ^ e.
  std::vector<std::uint64_t> root_path(n, 0);
  for (std::size_t x : order) {
    if (parent_edge[x] != kNone) {
      root_path[x] = root_path[graph.opposite(parent_edge[x], x)] ^ (std::uint64_t{1} << parent_edge[x]);
    }
  }
  for (std::size_t e = 0; e < graph.edge_count(); ++e) {
    if (!active(filter, e) || tree_edge[e]) continue;
    auto [u, v] = graph.ends(e);
    space.circuits.push_back(root_path[u] ^ root_path[v] ^ (std::uint64_t{1} << e));
  }
  return space;
}

// Visits every join exactly once (Gray-code order over the circuit basis).
template <typename Visitor>
void for_each_join(const JoinSpace& space, Visitor&& visit) {
  const std::size_t dim = space.circuits.size();
  if (dim >= 40) {
    throw GraftError(ErrorKind::kCapacity, "cycle space too large for exhaustive join search");
  }
  std::uint64_t current = space.base;
  visit(current);
  const std::uint64_t count = std::uint64_t{1} << dim;
  for (std::uint64_t i = 1; i < count; ++i) {
    current ^= space.circuits[static_cast<std::size_t>(std::countr_zero(i))];
    visit(current);
  }
}

inline IndexMask mask_from_bits(std::uint64_t bits, std::size_t edge_count) {
  IndexMask mask(edge_count, 0);
  for (std::size_t e = 0; e < edge_count; ++e) mask[e] = static_cast<char>((bits >> e) & 1U);
  return mask;
}

inline std::uint64_t bits_from_mask(const IndexMask& mask) {
  std::uint64_t bits = 0;
  for (std::size_t e = 0; e < mask.size(); ++e) {
    if (mask[e]) bits |= std::uint64_t{1} << e;
  }
  return bits;
}

// Minimum join by exhaustive enumeration. Ties are broken towards the
// smallest bit mask, i.e. the join whose largest differing edge id is
// absent.
inline std::optional<IndexMask> min_join_by_enumeration(const Multigraph& graph, const IndexMask& terminals,
                                                        EdgeFilter filter, std::size_t max_edges) {
  std::size_t active_edges = 0;
  for (std::size_t e = 0; e < graph.edge_count(); ++e) active_edges += active(filter, e) ? 1 : 0;
  if (active_edges > max_edges) {
    throw GraftError(ErrorKind::kCapacity, "brute-force join bound exceeded: " + std::to_string(active_edges) +
                                               " edges > " + std::to_string(max_edges));
  }
  auto space = join_space(graph, terminals, filter);
  if (!space) return std::nullopt;
  std::uint64_t best = 0;
  int best_size = std::numeric_limits<int>::max();
  for_each_join(*space, [&](std::uint64_t join) {
    int size = std::popcount(join);
    if (size < best_size || (size == best_size && join < best)) {
      best_size = size;
      best = join;
    }
  });
  return mask_from_bits(best, graph.edge_count());
}

inline std::size_t popcount(const IndexMask& mask) {
  std::size_t count = 0;
  for (char c : mask) count += c ? 1 : 0;
  return count;
}

}  // namespace grafts::detail

#endif  // GRAFTS_DETAIL_JOIN_SEARCH_HPP_
