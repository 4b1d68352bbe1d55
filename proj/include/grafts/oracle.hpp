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

// Exhaustive reference computations for small instances: simple paths and
// circuits, every minimum join, and F-distances as minimum path weights.
// None of this goes through the matching backend.

#ifndef GRAFTS_ORACLE_HPP_
#define GRAFTS_ORACLE_HPP_

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "grafts/detail/join_search.hpp"
#include "grafts/graft.hpp"
#include "grafts/join.hpp"

namespace grafts::oracle {

inline constexpr std::size_t kDefaultMaxPathVertices = 14;

// Index-level walk: vertices in order, edges[i] joins vertices[i] and the
// next vertex (cyclically for circuits).
struct IndexWalk {
  std::vector<std::size_t> vertices;
  std::vector<std::size_t> edges;
};

inline void require_path_bound(const Multigraph& graph, std::size_t max_vertices) {
  if (graph.vertex_count() > max_vertices) {
    throw GraftError(ErrorKind::kCapacity, "path enumeration is limited to " + std::to_string(max_vertices) +
                                               " vertices");
  }
}

// Calls visit(walk) for every simple path from `from` to `to` (the trivial
// path when from == to). Stops early when visit returns false.
inline void for_each_simple_path(const Multigraph& graph, std::size_t from, std::size_t to,
                                 const std::function<bool(const IndexWalk&)>& visit,
                                 std::size_t max_vertices = kDefaultMaxPathVertices) {
  require_path_bound(graph, max_vertices);
  IndexWalk walk{{from}, {}};
  std::vector<char> on(graph.vertex_count(), 0);
  on[from] = 1;
  bool stop = false;
  std::function<void(std::size_t)> dfs = [&](std::size_t x) {
    if (stop) return;
    if (x == to) {
      if (!visit(walk)) stop = true;
      return;
    }
    for (const Incidence& inc : graph.incidences(x)) {
      if (on[inc.other]) continue;
      on[inc.other] = 1;
      walk.vertices.push_back(inc.other);
      walk.edges.push_back(inc.edge);
      dfs(inc.other);
      walk.vertices.pop_back();
      walk.edges.pop_back();
      on[inc.other] = 0;
      if (stop) return;
    }
  };
  dfs(from);
}

// Every circuit exactly once, listed from its least vertex; parallel edge
// pairs count as circuits of length two.
inline void for_each_circuit(const Multigraph& graph, const std::function<bool(const IndexWalk&)>& visit,
                             std::size_t max_vertices = kDefaultMaxPathVertices) {
  require_path_bound(graph, max_vertices);
  const std::size_t n = graph.vertex_count();
  bool stop = false;
  for (std::size_t s = 0; s < n && !stop; ++s) {
    IndexWalk walk{{s}, {}};
    std::vector<char> on(n, 0);
    on[s] = 1;
    std::function<void(std::size_t)> dfs = [&](std::size_t x) {
      for (const Incidence& inc : graph.incidences(x)) {
        if (stop) return;
        if (inc.other == s && !walk.edges.empty()) {
          // Close the circuit once per orientation class: the closing edge
          // must have a larger index than the first edge.
          if (inc.edge > walk.edges.front() && inc.edge != walk.edges.back()) {
            walk.edges.push_back(inc.edge);
            if (!visit(walk)) stop = true;
            walk.edges.pop_back();
          }
          continue;
        }
        if (inc.other <= s || on[inc.other]) continue;
        on[inc.other] = 1;
        walk.vertices.push_back(inc.other);
        walk.edges.push_back(inc.edge);
        dfs(inc.other);
        walk.vertices.pop_back();
        walk.edges.pop_back();
        on[inc.other] = 0;
      }
    };
    dfs(s);
  }
}

inline int walk_weight(const IndexWalk& walk, const IndexMask& join) {
  int weight = 0;
  for (std::size_t e : walk.edges) weight += join[e] ? -1 : 1;
  return weight;
}

// Minimum F-weight over simple u-v paths; nullopt when none exists.
inline std::optional<int> min_path_weight(const Multigraph& graph, const IndexMask& join, std::size_t u,
                                          std::size_t v, std::size_t max_vertices = kDefaultMaxPathVertices) {
  std::optional<int> best;
  for_each_simple_path(
      graph, u, v,
      [&](const IndexWalk& walk) {
        int w = walk_weight(walk, join);
        if (!best || w < *best) best = w;
        return true;
      },
      max_vertices);
  return best;
}

// Every minimum join as a bit mask over edge indices, ascending.
inline std::vector<std::uint64_t> all_minimum_joins(const Multigraph& graph, const IndexMask& terminals) {
  auto space = detail::join_space(graph, terminals, nullptr);
  if (!space) return {};
  std::vector<std::uint64_t> best;
  int best_size = std::numeric_limits<int>::max();
  detail::for_each_join(*space, [&](std::uint64_t join) {
    int size = std::popcount(join);
    if (size < best_size) {
      best_size = size;
      best.clear();
    }
    if (size == best_size) best.push_back(join);
  });
  std::sort(best.begin(), best.end());
  return best;
}

inline std::optional<int> nu(const Multigraph& graph, const IndexMask& terminals) {
  auto joins = all_minimum_joins(graph, terminals);
  if (joins.empty()) return std::nullopt;
  return std::popcount(joins.front());
}

// Allowed edges as the union of all minimum joins.
inline IndexMask allowed_edges(const Multigraph& graph, const IndexMask& terminals) {
  std::uint64_t any = 0;
  for (std::uint64_t j : all_minimum_joins(graph, terminals)) any |= j;
  return detail::mask_from_bits(any, graph.edge_count());
}

}  // namespace grafts::oracle

#endif  // GRAFTS_ORACLE_HPP_
