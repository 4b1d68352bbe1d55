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

// Seeded random instance generators.
//
// The generator is std::mt19937_64 (64-bit Mersenne Twister, whose output
// sequence is fixed by the C++ standard). Bounded integers use rejection
// sampling on the raw 64-bit output and probabilities use the top 53 bits,
// so a seed yields the same instances with any standard library.

#ifndef GRAFTS_GENERATE_HPP_
#define GRAFTS_GENERATE_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "grafts/comb.hpp"
#include "grafts/decomposition.hpp"
#include "grafts/graft.hpp"
#include "grafts/join.hpp"

namespace grafts {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [lo, hi].
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
    const std::uint64_t span = hi - lo + 1;
    if (span == 0) return lo + next();
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return lo + x % span;
  }

  std::size_t index(std::size_t size) { return static_cast<std::size_t>(uniform(0, size - 1)); }

  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

enum class GenMode { kGraft, kComb, kCriticalQuasicomb };

struct GenConfig {
  std::uint64_t seed = 1;
  std::size_t min_vertices = 2;
  std::size_t max_vertices = 10;
  std::size_t max_edges = 22;
  double edge_density = 0.35;
  double terminal_density = 0.5;
  // Chance of doubling an edge with a parallel copy.
  double parallel_density = 0.05;
  std::size_t retry_budget = 2000;
  GenMode mode = GenMode::kGraft;
  bool connected = false;
  // Comb filters on the number of factor-components.
  std::size_t min_components = 1;
  std::size_t max_components = 64;

  void validate() const {
    if (min_vertices == 0 || min_vertices > max_vertices) {
      throw GraftError(ErrorKind::kInput, "vertex-count range is empty");
    }
    if (retry_budget == 0) throw GraftError(ErrorKind::kInput, "retry budget must be at least 1");
    if (min_components > max_components) throw GraftError(ErrorKind::kInput, "component range is empty");
  }
};

namespace detail {

inline std::string numbered(char prefix, std::size_t i) {
  std::string digits = std::to_string(i);
  if (digits.size() < 2) digits.insert(digits.begin(), '0');
  return std::string(1, prefix) + digits;
}

inline void add_parallel_copies(Rng& rng, const GenConfig& cfg, std::vector<Edge>& edges) {
  const std::size_t base = edges.size();
  for (std::size_t i = 0; i < base && edges.size() < cfg.max_edges; ++i) {
    if (rng.bernoulli(cfg.parallel_density)) edges.push_back({"", edges[i].u, edges[i].v});
  }
  for (std::size_t i = 0; i < edges.size(); ++i) edges[i].id = numbered('e', i);
}

// Random simple graph on `names` plus occasional parallel copies, with at
// most cfg.max_edges edges and, if cfg.connected, a random spanning tree.
inline std::vector<Edge> random_edges(Rng& rng, const GenConfig& cfg, const std::vector<VertexId>& names,
                                      const std::vector<std::pair<std::size_t, std::size_t>>& candidates,
                                      const std::vector<std::pair<std::size_t, std::size_t>>& tree) {
  std::vector<char> taken(candidates.size(), 0);
  std::vector<Edge> edges;
  for (auto [u, v] : tree) {
    edges.push_back({"", names[u], names[v]});
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if ((candidates[i] == std::pair{u, v}) || (candidates[i] == std::pair{v, u})) taken[i] = 1;
    }
  }
  std::vector<std::size_t> order(candidates.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.index(i)]);
  for (std::size_t i : order) {
    if (edges.size() >= cfg.max_edges) break;
    if (!taken[i] && rng.bernoulli(cfg.edge_density)) {
      edges.push_back({"", names[candidates[i].first], names[candidates[i].second]});
    }
  }
  add_parallel_copies(rng, cfg, edges);
  return edges;
}

}  // namespace detail

// A random graft. Terminal parity is repaired by toggling one random vertex
// of every component with an odd terminal count.
inline Graft gen_random_graft(Rng& rng, const GenConfig& cfg) {
  cfg.validate();
  const std::size_t n = static_cast<std::size_t>(rng.uniform(cfg.min_vertices, cfg.max_vertices));
  std::vector<VertexId> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(detail::numbered('v', i));
  std::vector<std::pair<std::size_t, std::size_t>> candidates, tree;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) candidates.emplace_back(u, v);
  }
  if (cfg.connected) {
    for (std::size_t v = 1; v < n; ++v) tree.emplace_back(rng.index(v), v);
  }
  Multigraph graph(names, detail::random_edges(rng, cfg, names, candidates, tree));
  IndexMask terminals(n, 0);
  for (std::size_t v = 0; v < n; ++v) terminals[v] = rng.bernoulli(cfg.terminal_density) ? 1 : 0;
  std::vector<std::size_t> label = graph.component_labels();
  std::vector<std::vector<std::size_t>> members(n);
  for (std::size_t v = 0; v < n; ++v) members[label[v]].push_back(v);
  for (const auto& group : members) {
    std::size_t odd = 0;
    for (std::size_t v : group) odd ^= terminals[v] ? 1 : 0;
    if (odd) terminals[group[rng.index(group.size())]] ^= 1;
  }
  VertexSet terminal_ids;
  for (std::size_t v = 0; v < n; ++v) {
    if (terminals[v]) terminal_ids.insert(names[v]);
  }
  return Graft(std::move(graph), std::move(terminal_ids));
}

inline Graft gen_random_graft(const GenConfig& cfg) {
  Rng rng(cfg.seed);
  return gen_random_graft(rng, cfg);
}

struct BipartiteSample {
  Multigraph graph;
  VertexSet spine;
  VertexSet tooth;
};

namespace detail {

inline BipartiteSample random_bipartite(Rng& rng, const GenConfig& cfg, std::size_t n) {
  std::size_t a = static_cast<std::size_t>(rng.uniform(1, n - 1));
  std::vector<VertexId> names;
  VertexSet spine, tooth;
  std::vector<char> is_spine(n, 0);
  for (std::size_t i = 0; i < a; ++i) {
    names.push_back(numbered('a', i));
    spine.insert(names.back());
    is_spine[i] = 1;
  }
  for (std::size_t i = 0; i < n - a; ++i) {
    names.push_back(numbered('b', i));
    tooth.insert(names.back());
  }
  std::vector<std::pair<std::size_t, std::size_t>> candidates, tree;
  for (std::size_t u = 0; u < a; ++u) {
    for (std::size_t v = a; v < n; ++v) candidates.emplace_back(u, v);
  }
  if (cfg.connected) {
    // Attach vertices in a random order, each to an earlier vertex of the
    // other side; start from one vertex of each side joined together.
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng.index(i)]);
    std::vector<std::size_t> placed_spine, placed_tooth;
    std::size_t first_a = *std::find_if(order.begin(), order.end(), [&](std::size_t v) { return is_spine[v]; });
    std::size_t first_b = *std::find_if(order.begin(), order.end(), [&](std::size_t v) { return !is_spine[v]; });
    tree.emplace_back(first_a, first_b);
    placed_spine.push_back(first_a);
    placed_tooth.push_back(first_b);
    for (std::size_t v : order) {
      if (v == first_a || v == first_b) continue;
      auto& other = is_spine[v] ? placed_tooth : placed_spine;
      tree.emplace_back(other[rng.index(other.size())], v);
      (is_spine[v] ? placed_spine : placed_tooth).push_back(v);
    }
  }
  return {Multigraph(names, random_edges(rng, cfg, names, candidates, tree)), std::move(spine), std::move(tooth)};
}

}  // namespace detail

struct GeneratedComb {
  OrderedBipartiteGraft comb;
  JoinSet join;          // the sampled join, a minimum join of the comb
  std::size_t attempts;  // samples drawn, including the accepted one
};

// Rejection sampling: a random bipartite graph, one random F-edge per tooth
// vertex, T = B ∪ {a ∈ A : odd F-degree}; accepted when F is a minimum join
// and the factor-component count is within the configured range.
inline GeneratedComb gen_random_comb(Rng& rng, const GenConfig& cfg) {
  cfg.validate();
  if (cfg.min_vertices < 2) throw GraftError(ErrorKind::kInput, "combs need at least two vertices");
  for (std::size_t attempt = 1; attempt <= cfg.retry_budget; ++attempt) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(cfg.min_vertices, cfg.max_vertices));
    BipartiteSample s = detail::random_bipartite(rng, cfg, n);
    const Multigraph& graph = s.graph;
    EdgeSet join;
    bool ok = true;
    for (const VertexId& b : s.tooth) {
      auto inc = graph.incidences(graph.vertex_index(b));
      if (inc.empty()) {
        ok = false;
        break;
      }
      join.insert(graph.edge(inc[rng.index(inc.size())].edge).id);
    }
    if (!ok) continue;
    IndexMask mask = graph.edge_mask(join);
    VertexSet terminals = s.tooth;
    for (const VertexId& a : s.spine) {
      int degree = 0;
      for (const Incidence& inc : graph.incidences(graph.vertex_index(a))) degree += mask[inc.edge] ? 1 : 0;
      if (degree % 2 == 1) terminals.insert(a);
    }
    OrderedBipartiteGraft comb = build_bipartite_graft(graph, terminals, s.spine, s.tooth);
    if (!is_minimum_join(comb.graft(), join)) continue;
    std::size_t k = factor_components(comb.graft()).size();
    if (k < cfg.min_components || k > cfg.max_components) continue;
    JoinSet f(comb.graft(), join);
    return {std::move(comb), std::move(f), attempt};
  }
  throw GraftError(ErrorKind::kCapacity, "comb generator exhausted its retry budget of " +
                                             std::to_string(cfg.retry_budget) + " samples");
}

struct GeneratedCritical {
  OrderedBipartiteGraft graft;
  VertexId root;
  JoinSet join;
  std::size_t attempts;
};

// Rejection sampling for critical quasicombs: a connected random bipartite
// graph, a root r ∈ B, one random F-edge per other tooth vertex,
// and T the odd-degree vertices of F; accepted when the result is critical
// with root r.
inline GeneratedCritical gen_critical_quasicomb(Rng& rng, const GenConfig& cfg) {
  cfg.validate();
  if (cfg.min_vertices < 2) throw GraftError(ErrorKind::kInput, "critical quasicombs need at least two vertices");
  GenConfig connected = cfg;
  connected.connected = true;
  for (std::size_t attempt = 1; attempt <= cfg.retry_budget; ++attempt) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(cfg.min_vertices, cfg.max_vertices));
    BipartiteSample s = detail::random_bipartite(rng, connected, n);
    const Multigraph& graph = s.graph;
    std::vector<VertexId> tooth(s.tooth.begin(), s.tooth.end());
    const VertexId root = tooth[rng.index(tooth.size())];
    // Every edge at a tooth vertex ends in A, so these choices never touch r.
    EdgeSet join;
    bool ok = true;
    for (const VertexId& b : tooth) {
      if (b == root) continue;
      auto inc = graph.incidences(graph.vertex_index(b));
      if (inc.empty()) {
        ok = false;
        break;
      }
      join.insert(graph.edge(inc[rng.index(inc.size())].edge).id);
    }
    if (!ok) continue;
    IndexMask mask = graph.edge_mask(join);
    VertexSet terminals;
    for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
      int degree = 0;
      for (const Incidence& inc : graph.incidences(v)) degree += mask[inc.edge] ? 1 : 0;
      if (degree % 2 == 1) terminals.insert(graph.vertex(v));
    }
    OrderedBipartiteGraft g = build_bipartite_graft(graph, terminals, s.spine, s.tooth);
    if (!is_critical_quasicomb(g, root).critical) continue;
    JoinSet f(g.graft(), join);
    return {std::move(g), root, std::move(f), attempt};
  }
  throw GraftError(ErrorKind::kCapacity, "critical-quasicomb generator exhausted its retry budget of " +
                                             std::to_string(cfg.retry_budget) + " samples");
}

struct EarComposition {
  VertexId root;
  std::vector<OrderedBipartiteGraft> steps;
  OrderedBipartiteGraft result;
};

// Composes `count` random effective ear grafts onto ({r}, ∅). Each ear is
// drawn with fresh vertices and edges; terminal choices are random where
// the ear-graft conditions leave them free, and a draw is kept only if
// validate_ear_step accepts it as valid and effective.
inline EarComposition gen_ear_composition(Rng& rng, std::size_t count, std::size_t max_ear_length = 4,
                                          std::size_t retry_budget = 2000) {
  const VertexId root = "r";
  OrderedBipartiteGraft current = singleton_root(root);
  EarComposition out{root, {}, current};
  std::size_t fresh_vertex = 0, fresh_edge = 0;
  for (std::size_t step = 0; step < count; ++step) {
    bool placed = false;
    for (std::size_t attempt = 0; attempt < retry_budget && !placed; ++attempt) {
      const Multigraph& base = current.graph();
      const bool round = base.vertex_count() >= 1 && rng.bernoulli(0.5);
      std::size_t s = rng.index(base.vertex_count());
      std::size_t t = round ? rng.index(base.vertex_count()) : s;
      bool s_spine = current.is_spine(s);
      bool t_spine = current.is_spine(t);
      std::size_t length = static_cast<std::size_t>(rng.uniform(1, max_ear_length));
      if (round) {
        // Sides alternate, so the parity of the length is forced by the
        // sides of the bonds; a circuit needs length at least two.
        bool want_odd = s_spine != t_spine;
        if ((length % 2 == 1) != want_odd) ++length;
        if (s == t && length < 2) length = 2;
      }
      std::vector<VertexId> path{base.vertex(s)};
      std::vector<bool> spine_side{s_spine};
      std::vector<std::size_t> fresh_ids;
      for (std::size_t i = 1; i < length + (round ? 0 : 1); ++i) {
        path.push_back(detail::numbered('x', fresh_vertex + fresh_ids.size()));
        fresh_ids.push_back(i);
        spine_side.push_back(!spine_side.back());
      }
      if (round) {
        path.push_back(base.vertex(t));
        spine_side.push_back(t_spine);
      }
      std::vector<Edge> edges;
      for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        edges.push_back({detail::numbered('f', fresh_edge + i), path[i], path[i + 1]});
      }
      VertexSet vertices(path.begin(), path.end());
      VertexSet spine, tooth, terminals;
      for (std::size_t i = 0; i < path.size(); ++i) (spine_side[i] ? spine : tooth).insert(path[i]);
      // Internal tooth vertices are terminals, tooth bonds are not; the
      // straight free end and spine vertices are drawn at random.
      for (std::size_t i = 0; i < path.size(); ++i) {
        bool is_bond = i == 0 || (round && i + 1 == path.size());
        if (!spine_side[i]) {
          if (!is_bond) terminals.insert(path[i]);
        } else if (rng.bernoulli(0.5)) {
          terminals.insert(path[i]);
        }
      }
      if (terminals.size() % 2 == 1) {
        std::vector<VertexId> flexible;
        for (std::size_t i = 0; i < path.size(); ++i) {
          if (spine_side[i]) flexible.push_back(path[i]);
        }
        if (flexible.empty()) continue;
        const VertexId& v = flexible[rng.index(flexible.size())];
        if (terminals.contains(v)) {
          terminals.erase(v);
        } else {
          terminals.insert(v);
        }
      }
      std::vector<VertexId> vertex_list(vertices.begin(), vertices.end());
      OrderedBipartiteGraft ear = build_bipartite_graft(Multigraph(vertex_list, edges), terminals, spine, tooth);
      EarValidation check = validate_ear_step(current, ear);
      if (!check.effective) continue;
      current = graft_sum(current, ear);
      fresh_vertex += fresh_ids.size();
      fresh_edge += edges.size();
      out.steps.push_back(std::move(ear));
      placed = true;
    }
    if (!placed) throw GraftError(ErrorKind::kCapacity, "ear composition generator exhausted its retry budget");
  }
  out.result = current;
  return out;
}

}  // namespace grafts

#endif  // GRAFTS_GENERATE_HPP_
