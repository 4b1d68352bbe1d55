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

// Combs, quasicombs and critical quasicombs, balanced walks, ear grafts and
// graft ear decompositions.
//
// A bipartite graft (G, T; A, B) is a quasicomb when nu(G, T) = |B ∩ T| and
// a comb when moreover B ⊆ T. A quasicomb is critical with root r ∈ B when
// every spine vertex is at F-distance 1 from r and every tooth vertex at
// F-distance 0. Critical quasicombs with root r are exactly the grafts
// obtained from ({r}, ∅; ∅, {r}) by repeatedly adding effective ear grafts;
// build_graft_ear_decomposition produces such a sequence and
// verify_graft_ear_decomposition replays one.

#ifndef GRAFTS_COMB_HPP_
#define GRAFTS_COMB_HPP_

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "grafts/graft.hpp"
#include "grafts/join.hpp"

namespace grafts {

enum class CombKind { kComb, kQuasicomb, kNeither };

inline const char* comb_kind_name(CombKind kind) {
  switch (kind) {
    case CombKind::kComb: return "comb";
    case CombKind::kQuasicomb: return "quasicomb";
    case CombKind::kNeither: return "neither";
  }
  return "neither";
}

struct CombClassification {
  CombKind kind = CombKind::kNeither;
  VertexSet spine;
  VertexSet tooth;
  int nu = 0;
};

inline CombClassification classify_comb(const OrderedBipartiteGraft& g) {
  CombClassification out{CombKind::kNeither, g.spine(), g.tooth(), nu(g.graft())};
  std::size_t tooth_terminals = 0;
  for (const VertexId& b : g.tooth()) tooth_terminals += g.terminals().contains(b) ? 1 : 0;
  if (static_cast<std::size_t>(out.nu) == tooth_terminals) {
    out.kind = tooth_terminals == g.tooth().size() ? CombKind::kComb : CombKind::kQuasicomb;
  }
  return out;
}

inline bool is_quasicomb(const OrderedBipartiteGraft& g) { return classify_comb(g).kind != CombKind::kNeither; }

enum class WalkShape { kPath, kCircuit, kEar };

namespace detail {

struct WalkIndices {
  std::vector<std::size_t> vertices;
  std::vector<std::size_t> edges;
  bool circuit = false;
};

// Resolves and checks a walk: listed edges join consecutive vertices and
// no vertex repeats. Throws kPrecondition when malformed.
inline WalkIndices resolve_walk(const Multigraph& graph, const WeightedWalkReport& walk) {
  WalkIndices out;
  out.circuit = walk.is_circuit();
  if (!out.circuit && walk.vertices.size() != walk.edges.size() + 1) {
    throw GraftError(ErrorKind::kPrecondition, "malformed walk: vertex and edge counts do not match");
  }
  for (const VertexId& v : walk.vertices) {
    auto i = graph.find_vertex(v);
    if (!i) throw GraftError(ErrorKind::kPrecondition, "malformed walk: unknown vertex '" + v + "'");
    out.vertices.push_back(*i);
  }
  std::vector<std::size_t> sorted = out.vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw GraftError(ErrorKind::kPrecondition, "malformed walk: repeated vertex");
  }
  const std::size_t k = out.vertices.size();
  for (std::size_t i = 0; i < walk.edges.size(); ++i) {
    auto e = graph.find_edge(walk.edges[i]);
    if (!e) throw GraftError(ErrorKind::kPrecondition, "malformed walk: unknown edge '" + walk.edges[i] + "'");
    auto [u, v] = graph.ends(*e);
    std::size_t a = out.vertices[i];
    std::size_t b = out.vertices[(i + 1) % k];
    if (!((u == a && v == b) || (u == b && v == a))) {
      throw GraftError(ErrorKind::kPrecondition, "malformed walk: edge '" + walk.edges[i] +
                                                     "' does not join its neighbours in the walk");
    }
    out.edges.push_back(*e);
  }
  if (out.circuit) {
    std::vector<std::size_t> edges = out.edges;
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
      throw GraftError(ErrorKind::kPrecondition, "malformed walk: circuit repeats an edge");
    }
  }
  return out;
}

// Number of walk edges at position i that lie in the join.
inline int join_degree_on_walk(const WalkIndices& walk, const IndexMask& join, std::size_t i) {
  const std::size_t m = walk.edges.size();
  int degree = 0;
  if (walk.circuit) {
    degree += join[walk.edges[i]] ? 1 : 0;
    degree += join[walk.edges[(i + m - 1) % m]] ? 1 : 0;
    return degree;
  }
  if (i < m) degree += join[walk.edges[i]] ? 1 : 0;
  if (i > 0) degree += join[walk.edges[i - 1]] ? 1 : 0;
  return degree;
}

}  // namespace detail

// F-balanced: every tooth vertex that is not an end (path), every tooth
// vertex (circuit), or every internal tooth vertex (ear relative to
// `support`) meets exactly one F-edge of the walk.
inline bool is_f_balanced(const OrderedBipartiteGraft& g, const EdgeSet& join, const WeightedWalkReport& walk,
                          WalkShape shape, const VertexSet& support = {}) {
  detail::WalkIndices w = detail::resolve_walk(g.graph(), walk);
  if ((shape == WalkShape::kCircuit) != w.circuit && shape != WalkShape::kEar) {
    throw GraftError(ErrorKind::kPrecondition, "malformed walk: shape does not match");
  }
  IndexMask mask = g.graph().edge_mask(join);
  const std::size_t k = w.vertices.size();
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t v = w.vertices[i];
    if (!g.is_tooth(v)) continue;
    if (shape == WalkShape::kPath && (i == 0 || i + 1 == k)) continue;
    if (shape == WalkShape::kEar && support.contains(g.graph().vertex(v))) continue;
    if (detail::join_degree_on_walk(w, mask, i) != 1) return false;
  }
  return true;
}

inline WeightedWalkReport weigh_walk(const OrderedBipartiteGraft& g, const EdgeSet& join, WeightedWalkReport walk) {
  detail::resolve_walk(g.graph(), walk);
  walk.weight = f_weight(join, EdgeSet(walk.edges.begin(), walk.edges.end()));
  walk.balanced = is_f_balanced(g, join, walk, walk.is_circuit() ? WalkShape::kCircuit : WalkShape::kPath);
  return walk;
}

// The unique tooth vertex of a weight-zero tooth-to-tooth path that meets
// no F-edge of the path. Throws kPrecondition for wrong ends or weight and
// kIntegrity if uniqueness or the half-path properties fail.
inline VertexId midvertex(const OrderedBipartiteGraft& g, const JoinSet& join, const WeightedWalkReport& path) {
  detail::WalkIndices w = detail::resolve_walk(g.graph(), path);
  if (w.circuit || w.vertices.empty()) throw GraftError(ErrorKind::kPrecondition, "midvertex needs a path");
  if (!g.is_tooth(w.vertices.front()) || !g.is_tooth(w.vertices.back())) {
    throw GraftError(ErrorKind::kPrecondition, "path ends are not both tooth vertices");
  }
  const EdgeSet edges(path.edges.begin(), path.edges.end());
  if (f_weight(join, edges) != 0) throw GraftError(ErrorKind::kPrecondition, "path weight is not zero");
  std::optional<std::size_t> mid;
  for (std::size_t i = 0; i < w.vertices.size(); ++i) {
    if (!g.is_tooth(w.vertices[i]) || detail::join_degree_on_walk(w, join.mask(), i) != 0) continue;
    if (mid) throw GraftError(ErrorKind::kIntegrity, "midvertex is not unique");
    mid = i;
  }
  if (!mid) throw GraftError(ErrorKind::kIntegrity, "path has no midvertex");
  auto half = [&](std::size_t from, std::size_t to) {
    WeightedWalkReport h;
    std::size_t lo = std::min(from, to), hi = std::max(from, to);
    for (std::size_t i = lo; i <= hi; ++i) h.vertices.push_back(path.vertices[i]);
    for (std::size_t i = lo; i < hi; ++i) h.edges.push_back(path.edges[i]);
    return h;
  };
  for (const WeightedWalkReport& h : {half(0, *mid), half(*mid, w.vertices.size() - 1)}) {
    if (f_weight(join, EdgeSet(h.edges.begin(), h.edges.end())) != 0 ||
        !is_f_balanced(g, join.edges(), h, WalkShape::kPath)) {
      throw GraftError(ErrorKind::kIntegrity, "half-path at the midvertex is not balanced of weight zero");
    }
  }
  return path.vertices[*mid];
}

struct CriticalCheck {
  bool critical = false;
  bool quasicomb = false;
  std::map<VertexId, Distance> distance_to_root;
};

// Critical with root r: a quasicomb with dist(x, r) = 1 for x ∈ A and
// dist(x, r) = 0 for x ∈ B.
inline CriticalCheck is_critical_quasicomb(const OrderedBipartiteGraft& g, const VertexId& root) {
  const Multigraph& graph = g.graph();
  std::size_t r = graph.vertex_index(root);
  if (!g.is_tooth(r)) throw GraftError(ErrorKind::kPrecondition, "root '" + root + "' is not a tooth vertex");
  CriticalCheck check;
  CombClassification cls = classify_comb(g);
  check.quasicomb = cls.kind != CombKind::kNeither;
  auto distances = detail::distances_from(graph, g.graft().terminal_mask(), cls.nu, r);
  bool ok = check.quasicomb;
  for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
    check.distance_to_root.emplace(graph.vertex(v), Distance{distances[v]});
    int want = g.is_spine(v) ? 1 : 0;
    if (!distances[v] || *distances[v] != want) ok = false;
  }
  check.critical = ok;
  return check;
}

enum class EarKind { kRound, kStraight };

inline const char* ear_kind_name(EarKind kind) { return kind == EarKind::kRound ? "round" : "straight"; }

// One step of a graft ear decomposition: the ear graft (P, T_P; A_P, B_P)
// plus its shape relative to the support it is attached to.
struct EarStep {
  OrderedBipartiteGraft graft;
  std::vector<VertexId> bonds;
  VertexSet internal;
  EdgeSet necks;
  EarKind kind = EarKind::kRound;
  bool effective = false;
};

struct EarValidation {
  bool valid = false;      // an ear graft relative to the base
  bool effective = false;  // valid and effective
  std::optional<EarKind> kind;
  std::vector<VertexId> bonds;
  VertexSet internal;
  EdgeSet necks;
  std::vector<std::string> shape_violations;     // not an ear, side clash
  std::vector<std::string> terminal_violations;  // tooth-terminal and effectiveness conditions
};

namespace detail {

// Vertex order of a path or circuit graph, starting from `start` when given.
inline std::optional<std::vector<std::size_t>> trace_ear(const Multigraph& p, bool circuit) {
  const std::size_t n = p.vertex_count();
  if (n == 0) return std::nullopt;
  std::size_t start = 0;
  if (!circuit) {
    bool found = false;
    for (std::size_t v = 0; v < n; ++v) {
      if (p.incidences(v).size() == 1) {
        start = v;
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  }
  std::vector<std::size_t> order{start};
  std::vector<char> seen(n, 0);
  seen[start] = 1;
  std::size_t prev_edge = kNone;
  std::size_t x = start;
  while (true) {
    std::size_t next_edge = kNone;
    for (const Incidence& inc : p.incidences(x)) {
      if (inc.edge != prev_edge) {
        next_edge = inc.edge;
        break;
      }
    }
    if (next_edge == kNone) break;
    std::size_t y = p.opposite(next_edge, x);
    if (seen[y]) break;
    seen[y] = 1;
    order.push_back(y);
    prev_edge = next_edge;
    x = y;
  }
  if (order.size() != n) return std::nullopt;
  return order;
}

}  // namespace detail

// Checks that `step` is an ear graft relative to `base`: side
// compatibility, ear shape against V(base), internal tooth vertices are
// step terminals while tooth bonds are not, and (for straight ears)
// effectiveness: a spine free end is not a terminal, a spine bond is, and
// every inner vertex is.
inline EarValidation validate_ear_step(const OrderedBipartiteGraft& base, const OrderedBipartiteGraft& step) {
  EarValidation out;
  const Multigraph& p = step.graph();
  const Multigraph& b = base.graph();
  for (const VertexId& a : base.spine()) {
    if (step.tooth().contains(a)) out.shape_violations.push_back("side clash: '" + a + "' is spine in the base and tooth in the ear");
  }
  for (const VertexId& a : step.spine()) {
    if (base.tooth().contains(a)) out.shape_violations.push_back("side clash: '" + a + "' is tooth in the base and spine in the ear");
  }
  if (p.edge_count() == 0) out.shape_violations.push_back("ear has no edges");
  for (const Edge& e : p.edges()) {
    if (b.find_edge(e.id)) out.shape_violations.push_back("edge '" + e.id + "' already belongs to the base");
  }
  bool degrees_ok = true;
  bool all_two = true;
  for (std::size_t v = 0; v < p.vertex_count(); ++v) {
    std::size_t d = p.incidences(v).size();
    if (d == 0 || d > 2) degrees_ok = false;
    if (d != 2) all_two = false;
  }
  std::optional<std::vector<std::size_t>> order;
  if (degrees_ok && p.edge_count() > 0) order = detail::trace_ear(p, all_two);
  if (!order) {
    out.shape_violations.push_back("ear is neither a path nor a circuit");
    return out;
  }
  for (std::size_t v : *order) {
    const VertexId& id = p.vertex(v);
    if (b.has_vertex(id)) {
      out.bonds.push_back(id);
    } else {
      out.internal.insert(id);
    }
  }
  const VertexId& first = p.vertex(order->front());
  const VertexId& last = p.vertex(order->back());
  std::optional<VertexId> free_end;
  if (all_two) {
    if (out.bonds.size() == 1) out.kind = EarKind::kRound;
  } else if (out.bonds.size() == 2 && b.has_vertex(first) && b.has_vertex(last)) {
    out.kind = EarKind::kRound;
  } else if (out.bonds.size() == 1 && (out.bonds[0] == first || out.bonds[0] == last)) {
    out.kind = EarKind::kStraight;
    free_end = out.bonds[0] == first ? last : first;
  }
  if (!out.kind) {
    out.shape_violations.push_back("ear meets the base in the wrong vertices");
    return out;
  }
  for (const Edge& e : p.edges()) {
    if (out.internal.contains(e.u) != out.internal.contains(e.v)) out.necks.insert(e.id);
  }
  const VertexSet& tp = step.terminals();
  for (const VertexId& v : out.internal) {
    if (step.tooth().contains(v) && !tp.contains(v)) {
      out.terminal_violations.push_back("internal tooth vertex '" + v + "' is not an ear terminal");
    }
  }
  for (const VertexId& v : out.bonds) {
    if (step.tooth().contains(v) && tp.contains(v)) {
      out.terminal_violations.push_back("bond tooth vertex '" + v + "' is an ear terminal");
    }
  }
  if (out.terminal_violations.empty() && !is_quasicomb(step)) {
    out.terminal_violations.push_back("ear graft is not a quasicomb");
  }
  out.valid = out.shape_violations.empty() && out.terminal_violations.empty();
  bool effective = true;
  if (*out.kind == EarKind::kStraight) {
    const VertexId& bond = out.bonds[0];
    if (step.spine().contains(*free_end) && tp.contains(*free_end)) {
      out.terminal_violations.push_back("straight ear: spine free end '" + *free_end + "' is a terminal");
      effective = false;
    }
    if (step.spine().contains(bond) && !tp.contains(bond)) {
      out.terminal_violations.push_back("straight ear: spine bond '" + bond + "' is not a terminal");
      effective = false;
    }
    // Without this a straight ear such as r-a-b-a'-b' with T = {b, b'}
    // passes the clauses above yet breaks criticality of the sum.
    for (const VertexId& v : out.internal) {
      if (v != *free_end && !tp.contains(v)) {
        out.terminal_violations.push_back("straight ear: inner vertex '" + v + "' is not a terminal");
        effective = false;
      }
    }
  }
  out.effective = out.valid && effective;
  return out;
}

inline EarValidation validate_ear_step(const OrderedBipartiteGraft& base, const EarStep& step) {
  EarValidation out = validate_ear_step(base, step.graft);
  if (out.kind && (*out.kind != step.kind || out.bonds != step.bonds)) {
    out.shape_violations.push_back("declared ear shape differs from the computed one");
    out.valid = out.effective = false;
  }
  return out;
}

struct GraftEarDecomposition {
  VertexId root;
  std::vector<EarStep> steps;
  OrderedBipartiteGraft target;
};

namespace detail {

// Step graft on the given edges of g; terminals are the vertices of odd
// degree in F restricted to those edges.
inline OrderedBipartiteGraft step_graft(const OrderedBipartiteGraft& g, const IndexMask& join,
                                        const std::vector<std::size_t>& edges) {
  const Multigraph& graph = g.graph();
  std::map<std::size_t, int> degree;
  std::vector<Edge> step_edges;
  for (std::size_t e : edges) {
    auto [u, v] = graph.ends(e);
    degree.try_emplace(u, 0);
    degree.try_emplace(v, 0);
    if (join[e]) {
      ++degree[u];
      ++degree[v];
    }
    step_edges.push_back(graph.edge(e));
  }
  std::vector<VertexId> vertices;
  VertexSet terminals, spine, tooth;
  for (auto [v, d] : degree) {
    const VertexId& id = graph.vertex(v);
    vertices.push_back(id);
    if (d % 2 == 1) terminals.insert(id);
    (g.is_spine(v) ? spine : tooth).insert(id);
  }
  return build_bipartite_graft(Multigraph(std::move(vertices), std::move(step_edges)), std::move(terminals),
                               std::move(spine), std::move(tooth));
}

inline EarStep make_step(const OrderedBipartiteGraft& support, OrderedBipartiteGraft graft) {
  EarValidation v = validate_ear_step(support, graft);
  if (!v.kind) throw GraftError(ErrorKind::kIntegrity, "builder produced a non-ear step");
  return EarStep{std::move(graft), v.bonds, v.internal, v.necks, *v.kind, v.effective};
}

}  // namespace detail

// Grows the decomposition from ({r}, ∅) keeping E[B', A \ A'] ∩ F = ∅ for
// the current support (A', B'). Each round takes the first applicable of:
//   (a) an edge from a new spine vertex to a support tooth vertex (never in
//       F), as a straight single-edge ear without terminals;
//   (b) a non-F edge f = uv from a support spine vertex u to a new tooth
//       vertex v, closed up by an F-shortest v-r path truncated at its
//       first support vertex; a round ear;
//   (c) an F-edge from a support spine vertex to a new tooth vertex, as a
//       straight ear whose two ends are terminals.
// Once every vertex is covered, leftover edges are added as single-edge
// round ears. Step terminals are the odd-degree vertices of F on the step,
// so F restricted to each step is a join of it.
inline GraftEarDecomposition build_graft_ear_decomposition(const OrderedBipartiteGraft& g, const VertexId& root,
                                                           const JoinSet& join) {
  if (!is_critical_quasicomb(g, root).critical) {
    throw GraftError(ErrorKind::kPrecondition, "graft is not a critical quasicomb with root '" + root + "'");
  }
  if (static_cast<int>(join.size()) != nu(g.graft())) {
    throw GraftError(ErrorKind::kPrecondition, "join is not minimum");
  }
  const Multigraph& graph = g.graph();
  const IndexMask& in_join = join.mask();
  const std::size_t r = graph.vertex_index(root);
  IndexMask covered(graph.vertex_count(), 0);
  IndexMask used(graph.edge_count(), 0);
  covered[r] = 1;
  std::size_t covered_count = 1;
  OrderedBipartiteGraft support = singleton_root(root);
  GraftEarDecomposition out{root, {}, g};

  auto spine_end = [&](std::size_t e) {
    auto [u, v] = graph.ends(e);
    return g.is_spine(u) ? std::pair{u, v} : std::pair{v, u};
  };
  auto commit = [&](const std::vector<std::size_t>& edges) {
    EarStep step = detail::make_step(support, detail::step_graft(g, in_join, edges));
    support = graft_sum(support, step.graft);
    for (std::size_t e : edges) {
      used[e] = 1;
      auto [u, v] = graph.ends(e);
      for (std::size_t x : {u, v}) {
        if (!covered[x]) {
          covered[x] = 1;
          ++covered_count;
        }
      }
    }
    out.steps.push_back(std::move(step));
  };

  while (covered_count < graph.vertex_count()) {
    std::optional<std::vector<std::size_t>> chosen;
    for (std::size_t e = 0; e < graph.edge_count() && !chosen; ++e) {
      auto [a, b] = spine_end(e);
      if (!covered[a] && covered[b]) {
        if (in_join[e]) throw GraftError(ErrorKind::kIntegrity, "support tooth vertex has an F-edge to a new spine vertex");
        chosen = std::vector<std::size_t>{e};
      }
    }
    for (std::size_t f = 0; f < graph.edge_count() && !chosen; ++f) {
      auto [u, v] = spine_end(f);
      if (!covered[u] || covered[v] || in_join[f]) continue;
      WeightedWalkReport path = extract_shortest_path(g.graft(), join, graph.vertex(v), root);
      if (path.edges.empty() || !join.contains(path.edges.front())) {
        throw GraftError(ErrorKind::kIntegrity, "F-shortest path to the root does not start with an F-edge");
      }
      std::vector<std::size_t> edges{f};
      for (std::size_t i = 0; i < path.edges.size(); ++i) {
        edges.push_back(graph.edge_index(path.edges[i]));
        if (covered[graph.vertex_index(path.vertices[i + 1])]) break;
      }
      chosen = std::move(edges);
    }
    for (std::size_t f = 0; f < graph.edge_count() && !chosen; ++f) {
      auto [u, v] = spine_end(f);
      if (covered[u] && !covered[v] && in_join[f]) chosen = std::vector<std::size_t>{f};
    }
    if (!chosen) {
      std::string stuck;
      for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
        if (covered[v]) stuck += (stuck.empty() ? "" : ",") + graph.vertex(v);
      }
      throw GraftError(ErrorKind::kIntegrity, "cannot extend the support {" + stuck + "}");
    }
    commit(*chosen);
  }
  for (std::size_t e = 0; e < graph.edge_count(); ++e) {
    if (!used[e]) commit({e});
  }
  return out;
}

struct DecompositionReport {
  bool ok = false;
  std::vector<std::string> failures;
  // Ear-graft syntax that disagrees with the replay but did not break
  // criticality.
  std::vector<std::string> warnings;
};

// Replays the sum from ({r}, ∅), checking every step as an ear graft, every
// prefix for criticality with root r, F-balance of each step when a join
// is given, and finally equality with the target.
inline DecompositionReport verify_graft_ear_decomposition(const GraftEarDecomposition& d,
                                                         const std::optional<EdgeSet>& join = std::nullopt) {
  DecompositionReport report;
  if (!d.target.graph().has_vertex(d.root) || !d.target.tooth().contains(d.root)) {
    report.failures.push_back("root is not a tooth vertex of the target");
    return report;
  }
  OrderedBipartiteGraft current = singleton_root(d.root);
  for (std::size_t i = 0; i < d.steps.size(); ++i) {
    const EarStep& step = d.steps[i];
    const std::string where = "step " + std::to_string(i + 1) + ": ";
    EarValidation check = validate_ear_step(current, step);
    for (const std::string& v : check.shape_violations) report.failures.push_back(where + v);
    for (const std::string& v : check.terminal_violations) report.warnings.push_back(where + v);
    try {
      current = graft_sum(current, step.graft);
    } catch (const GraftError& e) {
      report.failures.push_back(where + e.what());
      return report;
    }
    if (!is_critical_quasicomb(current, d.root).critical) {
      report.failures.push_back(where + "prefix is not a critical quasicomb with the root");
    }
    if (join) {
      EdgeSet restricted;
      for (const Edge& e : step.graft.graph().edges()) {
        if (join->contains(e.id)) restricted.insert(e.id);
      }
      const Graft& sg = step.graft.graft();
      if (!is_join(sg, restricted) || static_cast<int>(restricted.size()) != nu(sg)) {
        report.failures.push_back(where + "join restricted to the step is not a minimum join of it");
      }
    }
  }
  if (!(current == d.target)) report.failures.push_back("replayed graft differs from the target");
  report.ok = report.failures.empty();
  return report;
}

}  // namespace grafts

#endif  // GRAFTS_COMB_HPP_
