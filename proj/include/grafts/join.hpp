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

// Minimum joins, join-induced weights and distances.
//
// For a join F, every edge weighs +1 off F and -1 on F. The F-distance
// between u and v is the least weight of a u-v path; for a minimum join it
// equals nu(G, T Δ {u, v}) - nu(G, T) and so does not depend on F. In a
// factor-connected graft all distances are <= 0.

#ifndef GRAFTS_JOIN_HPP_
#define GRAFTS_JOIN_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grafts/detail/join_search.hpp"
#include "grafts/graft.hpp"

namespace grafts {

enum class JoinBackend { kMatching, kBruteForce };

struct EngineConfig {
  JoinBackend backend = JoinBackend::kMatching;
  std::size_t max_brute_edges = 22;
  // Test hook: report distances with the opposite sign. Every caller of
  // f_distance sees the flipped convention.
  bool flip_distance_sign = false;
};

// Per-thread engine settings. Use ScopedEngineConfig to change them.
inline EngineConfig& engine_config() {
  thread_local EngineConfig config;
  return config;
}

class ScopedEngineConfig {
 public:
  explicit ScopedEngineConfig(const EngineConfig& config) : saved_(engine_config()) {
    engine_config() = config;
  }
  ~ScopedEngineConfig() { engine_config() = saved_; }
  ScopedEngineConfig(const ScopedEngineConfig&) = delete;
  ScopedEngineConfig& operator=(const ScopedEngineConfig&) = delete;

 private:
  EngineConfig saved_;
};

namespace detail {

inline std::optional<IndexMask> min_join_mask(const Multigraph& graph, const IndexMask& terminals,
                                              EdgeFilter filter = nullptr) {
  const EngineConfig& config = engine_config();
  if (config.backend == JoinBackend::kBruteForce) {
    return min_join_by_enumeration(graph, terminals, filter, config.max_brute_edges);
  }
  return min_join_by_matching(graph, terminals, filter);
}

inline std::optional<int> nu(const Multigraph& graph, const IndexMask& terminals, EdgeFilter filter = nullptr) {
  auto join = min_join_mask(graph, terminals, filter);
  if (!join) return std::nullopt;
  return static_cast<int>(popcount(*join));
}

inline IndexMask toggled(IndexMask terminals, std::size_t u, std::size_t v) {
  if (u != v) {
    terminals[u] ^= 1;
    terminals[v] ^= 1;
  }
  return terminals;
}

// nu(G, T Δ {u, v}) - nu(G, T) with the usual orientation; nullopt when u
// and v lie in different components.
inline std::optional<int> raw_distance(const Multigraph& graph, const IndexMask& terminals, int nu_t,
                                       std::size_t u, std::size_t v) {
  auto other = nu(graph, toggled(terminals, u, v));
  if (!other) return std::nullopt;
  return *other - nu_t;
}

inline int sign() { return engine_config().flip_distance_sign ? -1 : 1; }

// F-distances from source to every vertex (nullopt where unreachable).
inline std::vector<std::optional<int>> distances_from(const Multigraph& graph, const IndexMask& terminals,
                                                      int nu_t, std::size_t source) {
  std::vector<std::size_t> label = graph.component_labels();
  std::vector<std::optional<int>> out(graph.vertex_count());
  for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
    if (label[v] != label[source]) continue;
    auto d = raw_distance(graph, terminals, nu_t, source, v);
    if (d) out[v] = sign() * *d;
  }
  return out;
}

// Splits an even-degree edge set into edge-disjoint circuits. Each circuit
// is returned as (vertices, edges) with edges[i] joining vertices[i] and
// vertices[i + 1 mod k].
inline std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> split_into_circuits(
    const Multigraph& graph, IndexMask edges) {
  std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> circuits;
  std::vector<std::size_t> position(graph.vertex_count(), kNone);
  auto next_edge = [&](std::size_t x) -> std::size_t {
    for (const Incidence& inc : graph.incidences(x)) {
      if (edges[inc.edge]) return inc.edge;
    }
    return kNone;
  };
  for (std::size_t first = 0; first < graph.edge_count(); ++first) {
    if (!edges[first]) continue;
    std::size_t start = graph.ends(first).first;
    std::vector<std::size_t> trail_vertices{start};
    std::vector<std::size_t> trail_edges;
    position[start] = 0;
    while (true) {
      std::size_t current = trail_vertices.back();
      std::size_t e = next_edge(current);
      if (e == kNone) {
        if (trail_vertices.size() != 1) {
          throw GraftError(ErrorKind::kIntegrity, "edge set is not even at every vertex");
        }
        position[current] = kNone;
        break;
      }
      edges[e] = 0;
      std::size_t next = graph.opposite(e, current);
      if (position[next] == kNone) {
        position[next] = trail_vertices.size();
        trail_vertices.push_back(next);
        trail_edges.push_back(e);
        continue;
      }
      std::size_t at = position[next];
      std::vector<std::size_t> cycle_vertices(trail_vertices.begin() + static_cast<std::ptrdiff_t>(at),
                                              trail_vertices.end());
      std::vector<std::size_t> cycle_edges(trail_edges.begin() + static_cast<std::ptrdiff_t>(at), trail_edges.end());
      cycle_edges.push_back(e);
      for (std::size_t i = at + 1; i < trail_vertices.size(); ++i) position[trail_vertices[i]] = kNone;
      trail_vertices.resize(at + 1);
      trail_edges.resize(at);
      circuits.emplace_back(std::move(cycle_vertices), std::move(cycle_edges));
    }
  }
  return circuits;
}

}  // namespace detail

class JoinSet {
 public:
  JoinSet() = default;

  // Throws kPrecondition unless `edges` is a join of `g`.
  JoinSet(const Graft& g, EdgeSet edges) : edges_(std::move(edges)) {
    mask_ = g.graph().edge_mask(edges_);
    if (!is_join(g.graph(), g.terminal_mask(), mask_)) {
      throw GraftError(ErrorKind::kPrecondition, "edge set is not a join of the graft");
    }
  }

  static JoinSet from_mask(const Graft& g, const IndexMask& mask) {
    return JoinSet(g, g.graph().edge_ids(mask));
  }

  const EdgeSet& edges() const { return edges_; }
  const IndexMask& mask() const { return mask_; }
  std::size_t size() const { return edges_.size(); }
  bool contains(const EdgeId& e) const { return edges_.contains(e); }

  friend bool operator==(const JoinSet& a, const JoinSet& b) { return a.edges_ == b.edges_; }

 private:
  EdgeSet edges_;
  IndexMask mask_;
};

struct WeightedWalkReport {
  // A path lists one more vertex than edges; a circuit lists equally many,
  // with edges[i] joining vertices[i] and vertices[(i + 1) % k].
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
  int weight = 0;
  // Filled in only when a bipartition is known.
  std::optional<bool> balanced;

  bool is_circuit() const { return !edges.empty() && vertices.size() == edges.size(); }
};

struct Distance {
  std::optional<int> value;

  bool reachable() const { return value.has_value(); }
  friend bool operator==(const Distance&, const Distance&) = default;
};

inline std::string to_string(const Distance& d) {
  return d.value ? std::to_string(*d.value) : std::string("unreachable");
}

// Exhaustive minimum join; ties go to the smallest edge bit mask.
inline JoinSet min_join_bruteforce(const Graft& g, std::optional<std::size_t> max_edges = std::nullopt) {
  auto mask = detail::min_join_by_enumeration(g.graph(), g.terminal_mask(), nullptr,
                                              max_edges.value_or(engine_config().max_brute_edges));
  if (!mask) throw GraftError(ErrorKind::kPrecondition, "not a graft");
  return JoinSet::from_mask(g, *mask);
}

inline JoinSet min_join(const Graft& g) {
  auto mask = detail::min_join_mask(g.graph(), g.terminal_mask());
  if (!mask) throw GraftError(ErrorKind::kPrecondition, "not a graft");
  return JoinSet::from_mask(g, *mask);
}

inline int nu(const Graft& g) { return static_cast<int>(min_join(g).size()); }

// |sub \ F| - |sub ∩ F|.
inline int f_weight(const EdgeSet& join, const EdgeSet& sub) {
  int weight = 0;
  for (const EdgeId& e : sub) weight += join.contains(e) ? -1 : 1;
  return weight;
}

inline int f_weight(const JoinSet& join, const EdgeSet& sub) { return f_weight(join.edges(), sub); }

inline bool is_minimum_join(const Graft& g, const EdgeSet& join) {
  JoinSet checked(g, join);
  return static_cast<int>(checked.size()) == nu(g);
}

// A circuit of negative F-weight, present exactly when F is a join but not
// a minimum one.
inline std::optional<WeightedWalkReport> find_negative_circuit(const Graft& g, const EdgeSet& join) {
  JoinSet checked(g, join);
  IndexMask best = *detail::min_join_mask(g.graph(), g.terminal_mask());
  if (detail::popcount(best) == checked.size()) return std::nullopt;
  IndexMask diff(g.graph().edge_count(), 0);
  for (std::size_t e = 0; e < diff.size(); ++e) diff[e] = checked.mask()[e] ^ best[e];
  for (auto& [vertices, edges] : detail::split_into_circuits(g.graph(), diff)) {
    WeightedWalkReport report;
    for (std::size_t v : vertices) report.vertices.push_back(g.graph().vertex(v));
    for (std::size_t e : edges) {
      report.edges.push_back(g.graph().edge(e).id);
      report.weight += checked.mask()[e] ? -1 : 1;
    }
    if (report.weight < 0) return report;
  }
  throw GraftError(ErrorKind::kIntegrity, "smaller join found but no negative circuit in the difference");
}

inline Distance f_distance(const Graft& g, const VertexId& u, const VertexId& v) {
  const Multigraph& graph = g.graph();
  std::size_t ui = graph.vertex_index(u);
  std::size_t vi = graph.vertex_index(v);
  int base = static_cast<int>(detail::popcount(*detail::min_join_mask(graph, g.terminal_mask())));
  auto d = detail::raw_distance(graph, g.terminal_mask(), base, ui, vi);
  if (!d) return {};
  return {detail::sign() * *d};
}

// An F-shortest u-v path: F Δ F' for a minimum join F' of (G, T Δ {u, v})
// is a u-v path plus circuits of weight zero, and any u-v path inside it
// is F-shortest.
inline WeightedWalkReport extract_shortest_path(const Graft& g, const JoinSet& join, const VertexId& u,
                                                const VertexId& v) {
  const Multigraph& graph = g.graph();
  std::size_t ui = graph.vertex_index(u);
  std::size_t vi = graph.vertex_index(v);
  IndexMask own = graph.edge_mask(join.edges());
  int nu_t = static_cast<int>(detail::popcount(*detail::min_join_mask(graph, g.terminal_mask())));
  if (static_cast<int>(join.size()) != nu_t) {
    throw GraftError(ErrorKind::kPrecondition, "join is not minimum");
  }
  auto other = detail::min_join_mask(graph, detail::toggled(g.terminal_mask(), ui, vi));
  if (!other) {
    throw GraftError(ErrorKind::kPrecondition, "'" + u + "' and '" + v + "' are unreachable from each other");
  }
  IndexMask diff(graph.edge_count(), 0);
  for (std::size_t e = 0; e < diff.size(); ++e) diff[e] = own[e] ^ (*other)[e];
  detail::BfsTree tree = detail::bfs(graph, ui, &diff);
  std::vector<std::size_t> vertices{vi};
  std::vector<std::size_t> edges;
  for (std::size_t x = vi; x != ui;) {
    std::size_t e = tree.parent_edge[x];
    if (e == detail::kNone) throw GraftError(ErrorKind::kIntegrity, "difference of joins has no u-v path");
    edges.push_back(e);
    x = graph.opposite(e, x);
    vertices.push_back(x);
  }
  WeightedWalkReport report;
  for (auto it = vertices.rbegin(); it != vertices.rend(); ++it) report.vertices.push_back(graph.vertex(*it));
  for (auto it = edges.rbegin(); it != edges.rend(); ++it) {
    report.edges.push_back(graph.edge(*it).id);
    report.weight += own[*it] ? -1 : 1;
  }
  int expected = static_cast<int>(detail::popcount(*other)) - nu_t;
  if (report.weight != expected) {
    throw GraftError(ErrorKind::kIntegrity, "extracted path weight differs from the distance");
  }
  return report;
}

namespace detail {

// e is allowed iff some minimum join uses it, i.e. iff
// 1 + nu(G - e, T Δ {ends of e}) = nu(G, T).
inline bool is_allowed_edge(const Multigraph& graph, const IndexMask& terminals, int nu_t, std::size_t e) {
  IndexMask rest(graph.edge_count(), 1);
  rest[e] = 0;
  auto [u, v] = graph.ends(e);
  auto residual = nu(graph, toggled(terminals, u, v), &rest);
  return residual && *residual + 1 == nu_t;
}

}  // namespace detail

inline bool is_allowed_edge(const Graft& g, const EdgeId& e) {
  return detail::is_allowed_edge(g.graph(), g.terminal_mask(), nu(g), g.graph().edge_index(e));
}

}  // namespace grafts

#endif  // GRAFTS_JOIN_HPP_
