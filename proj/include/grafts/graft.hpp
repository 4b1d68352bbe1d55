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

// Multigraphs, grafts and bipartite grafts with an ordered bipartition,
// together with the three graft operations: induced subgraft, contraction
// and sum.
//
// Vertices and edges carry opaque string ids supplied by the caller. A
// Multigraph keeps both sorted by id and exposes dense indices into those
// sorted lists; every algorithm in this library works on the indices and
// reports results in ids. Indices are only meaningful for the graph that
// produced them.

#ifndef GRAFTS_GRAFT_HPP_
#define GRAFTS_GRAFT_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace grafts {

enum class ErrorKind {
  kInput,         // unknown ids, malformed documents
  kValidation,    // a value violates a type invariant
  kPrecondition,  // an operation was called outside its domain
  kCapacity,      // a brute-force bound was exceeded
  kIntegrity,     // a guaranteed structural property failed; indicates a bug
};

inline const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInput: return "input";
    case ErrorKind::kValidation: return "validation";
    case ErrorKind::kPrecondition: return "precondition";
    case ErrorKind::kCapacity: return "capacity";
    case ErrorKind::kIntegrity: return "integrity";
  }
  return "unknown";
}

class GraftError : public std::runtime_error {
 public:
  GraftError(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + " error: " +
                           message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

using VertexId = std::string;
using EdgeId = std::string;
using VertexSet = std::set<VertexId>;
using EdgeSet = std::set<EdgeId>;

// Dense membership flags over vertex or edge indices of one graph.
using IndexMask = std::vector<char>;

struct Edge {
  EdgeId id;
  VertexId u;
  VertexId v;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
  std::size_t edge;
  std::size_t other;
};

class Multigraph {
 public:
  Multigraph() = default;

  // Throws kValidation on duplicate ids, unknown endpoints or self-loops.
  Multigraph(std::vector<VertexId> vertices, std::vector<Edge> edges) {
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) !=
        vertices.end()) {
      throw GraftError(ErrorKind::kValidation, "duplicate vertex id");
    }
    std::sort(edges.begin(), edges.end(),
              [](const Edge& a, const Edge& b) { return a.id < b.id; });
    vertices_ = std::move(vertices);
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      vertex_index_.emplace(vertices_[i], i);
    }
    incidences_.resize(vertices_.size());
    ends_.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const Edge& e = edges[i];
      if (i > 0 && edges[i - 1].id == e.id) {
        throw GraftError(ErrorKind::kValidation, "duplicate edge id '" + e.id + "'");
      }
      auto u = find_vertex(e.u);
      auto v = find_vertex(e.v);
      if (!u || !v) {
        throw GraftError(ErrorKind::kValidation,
                         "edge '" + e.id + "' has an endpoint outside the vertex set");
      }
      if (*u == *v) {
        throw GraftError(ErrorKind::kValidation, "edge '" + e.id + "' is a self-loop");
      }
      edge_index_.emplace(e.id, i);
      ends_.emplace_back(*u, *v);
      incidences_[*u].push_back({i, *v});
      incidences_[*v].push_back({i, *u});
    }
    edges_ = std::move(edges);
  }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const VertexId& vertex(std::size_t index) const { return vertices_[index]; }
  const Edge& edge(std::size_t index) const { return edges_[index]; }

  std::optional<std::size_t> find_vertex(const VertexId& id) const {
    auto it = vertex_index_.find(id);
    if (it == vertex_index_.end()) return std::nullopt;
    return it->second;
  }
  std::optional<std::size_t> find_edge(const EdgeId& id) const {
    auto it = edge_index_.find(id);
    if (it == edge_index_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t vertex_index(const VertexId& id) const {
    auto index = find_vertex(id);
    if (!index) throw GraftError(ErrorKind::kInput, "unknown vertex '" + id + "'");
    return *index;
  }
  std::size_t edge_index(const EdgeId& id) const {
    auto index = find_edge(id);
    if (!index) throw GraftError(ErrorKind::kInput, "unknown edge '" + id + "'");
    return *index;
  }
  bool has_vertex(const VertexId& id) const { return find_vertex(id).has_value(); }

  std::pair<std::size_t, std::size_t> ends(std::size_t edge) const { return ends_[edge]; }
  std::size_t opposite(std::size_t edge, std::size_t vertex) const {
    return ends_[edge].first == vertex ? ends_[edge].second : ends_[edge].first;
  }
  std::span<const Incidence> incidences(std::size_t vertex) const {
    return incidences_[vertex];
  }

  // Component label per vertex index; labels are 0..k-1 in order of the
  // least vertex index of each component.
  std::vector<std::size_t> component_labels() const {
    constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> label(vertex_count(), kUnset);
    std::size_t next = 0;
    std::vector<std::size_t> stack;
    for (std::size_t s = 0; s < vertex_count(); ++s) {
      if (label[s] != kUnset) continue;
      label[s] = next;
      stack.push_back(s);
      while (!stack.empty()) {
        std::size_t x = stack.back();
        stack.pop_back();
        for (const Incidence& inc : incidences_[x]) {
          if (label[inc.other] == kUnset) {
            label[inc.other] = next;
            stack.push_back(inc.other);
          }
        }
      }
      ++next;
    }
    return label;
  }

  IndexMask vertex_mask(const VertexSet& ids) const {
    IndexMask mask(vertex_count(), 0);
    for (const VertexId& id : ids) mask[vertex_index(id)] = 1;
    return mask;
  }
  IndexMask edge_mask(const EdgeSet& ids) const {
    IndexMask mask(edge_count(), 0);
    for (const EdgeId& id : ids) mask[edge_index(id)] = 1;
    return mask;
  }
  VertexSet vertex_ids(const IndexMask& mask) const {
    VertexSet out;
    for (std::size_t i = 0; i < mask.size(); ++i) {
      if (mask[i]) out.insert(vertices_[i]);
    }
    return out;
  }
  EdgeSet edge_ids(const IndexMask& mask) const {
    EdgeSet out;
    for (std::size_t i = 0; i < mask.size(); ++i) {
      if (mask[i]) out.insert(edges_[i].id);
    }
    return out;
  }

  friend bool operator==(const Multigraph& a, const Multigraph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
  std::map<VertexId, std::size_t> vertex_index_;
  std::map<EdgeId, std::size_t> edge_index_;
  std::vector<std::pair<std::size_t, std::size_t>> ends_;
  std::vector<std::vector<Incidence>> incidences_;
};

// True iff every connected component holds an even number of flagged
// vertices.
inline bool has_even_terminal_parity(const Multigraph& graph, const IndexMask& terminals) {
  std::vector<std::size_t> label = graph.component_labels();
  std::vector<char> odd(graph.vertex_count(), 0);
  for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
    if (terminals[v]) odd[label[v]] ^= 1;
  }
  return std::none_of(odd.begin(), odd.end(), [](char c) { return c != 0; });
}

inline bool validate_graft(const Multigraph& graph, const VertexSet& terminals) {
  return has_even_terminal_parity(graph, graph.vertex_mask(terminals));
}

class Graft {
 public:
  Graft() = default;

  Graft(Multigraph graph, VertexSet terminals)
      : graph_(std::move(graph)), terminals_(std::move(terminals)) {
    terminal_mask_ = graph_.vertex_mask(terminals_);
    if (!has_even_terminal_parity(graph_, terminal_mask_)) {
      throw GraftError(ErrorKind::kValidation,
                       "graft parity: a connected component has an odd number of terminals");
    }
  }

  const Multigraph& graph() const { return graph_; }
  const VertexSet& terminals() const { return terminals_; }
  const IndexMask& terminal_mask() const { return terminal_mask_; }
  bool is_terminal(const VertexId& v) const { return terminals_.contains(v); }

  friend bool operator==(const Graft& a, const Graft& b) {
    return a.graph_ == b.graph_ && a.terminals_ == b.terminals_;
  }

 private:
  Multigraph graph_;
  VertexSet terminals_;
  IndexMask terminal_mask_;
};

enum class Side : std::uint8_t { kSpine, kTooth };

// (G, T; A, B): A is the spine side and B the tooth side. The order matters;
// swapping the sides gives a different value.
class OrderedBipartiteGraft {
 public:
  OrderedBipartiteGraft() = default;

  OrderedBipartiteGraft(Graft graft, VertexSet spine, VertexSet tooth)
      : graft_(std::move(graft)), spine_(std::move(spine)), tooth_(std::move(tooth)) {
    const Multigraph& g = graft_.graph();
    side_.assign(g.vertex_count(), Side::kSpine);
    IndexMask seen(g.vertex_count(), 0);
    for (const VertexId& a : spine_) {
      auto i = g.find_vertex(a);
      if (!i) throw GraftError(ErrorKind::kValidation, "bipartition coverage: spine vertex '" + a + "' is not in the graph");
      seen[*i] = 1;
    }
    for (const VertexId& b : tooth_) {
      auto i = g.find_vertex(b);
      if (!i) throw GraftError(ErrorKind::kValidation, "bipartition coverage: tooth vertex '" + b + "' is not in the graph");
      if (seen[*i]) throw GraftError(ErrorKind::kValidation, "bipartition overlap: '" + b + "' is on both sides");
      seen[*i] = 1;
      side_[*i] = Side::kTooth;
    }
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      if (!seen[v]) {
        throw GraftError(ErrorKind::kValidation,
                         "bipartition coverage: '" + g.vertex(v) + "' is on neither side");
      }
    }
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      auto [u, v] = g.ends(e);
      if (side_[u] == side_[v]) {
        throw GraftError(ErrorKind::kValidation,
                         "not bipartite: edge '" + g.edge(e).id + "' joins two vertices of one side");
      }
    }
  }

  const Graft& graft() const { return graft_; }
  const Multigraph& graph() const { return graft_.graph(); }
  const VertexSet& terminals() const { return graft_.terminals(); }
  const VertexSet& spine() const { return spine_; }
  const VertexSet& tooth() const { return tooth_; }
  Side side(std::size_t vertex) const { return side_[vertex]; }
  bool is_spine(std::size_t vertex) const { return side_[vertex] == Side::kSpine; }
  bool is_tooth(std::size_t vertex) const { return side_[vertex] == Side::kTooth; }

  friend bool operator==(const OrderedBipartiteGraft& a, const OrderedBipartiteGraft& b) {
    return a.graft_ == b.graft_ && a.spine_ == b.spine_ && a.tooth_ == b.tooth_;
  }

 private:
  Graft graft_;
  VertexSet spine_;
  VertexSet tooth_;
  std::vector<Side> side_;
};

// Validates and assembles (G, T; A, B). Throws kValidation naming the
// violated invariant, or kInput for terminals outside the vertex set.
inline OrderedBipartiteGraft build_bipartite_graft(Multigraph graph, VertexSet terminals,
                                                   VertexSet spine, VertexSet tooth) {
  // Side checks come first so that a non-bipartite input is reported as such
  // even if its terminal parity is also off.
  OrderedBipartiteGraft sides_only(Graft(graph, {}), spine, tooth);
  return OrderedBipartiteGraft(Graft(std::move(graph), std::move(terminals)),
                               std::move(spine), std::move(tooth));
}

enum class VertexSetRole { kContractionTarget, kInducedSupport, kSeparatingCandidate };

struct RoleTaggedVertices {
  VertexSetRole role;
  VertexSet vertices;
};

inline const char* role_name(VertexSetRole role) {
  switch (role) {
    case VertexSetRole::kContractionTarget: return "contraction target";
    case VertexSetRole::kInducedSupport: return "induced support";
    case VertexSetRole::kSeparatingCandidate: return "separating candidate";
  }
  return "vertex set";
}

// Throws kInput unless the tagged set lies inside the graph.
inline void require_subset(const Multigraph& graph, const RoleTaggedVertices& x) {
  for (const VertexId& v : x.vertices) {
    if (!graph.has_vertex(v)) {
      throw GraftError(ErrorKind::kInput,
                       std::string(role_name(x.role)) + " mentions unknown vertex '" + v + "'");
    }
  }
}

inline bool is_join(const Multigraph& graph, const IndexMask& terminals, const IndexMask& join) {
  std::vector<char> parity(graph.vertex_count(), 0);
  for (std::size_t e = 0; e < graph.edge_count(); ++e) {
    if (!join[e]) continue;
    auto [u, v] = graph.ends(e);
    parity[u] ^= 1;
    parity[v] ^= 1;
  }
  for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
    if ((parity[v] != 0) != (terminals[v] != 0)) return false;
  }
  return true;
}

inline bool is_join(const Graft& g, const EdgeSet& join) {
  return is_join(g.graph(), g.terminal_mask(), g.graph().edge_mask(join));
}

// G[X] with T ∩ X. Throws kValidation if the result is not a graft; use
// decomposition.hpp's induced_subgraft when X should be separating.
inline Graft restrict_graft(const Graft& g, const VertexSet& x) {
  require_subset(g.graph(), {VertexSetRole::kInducedSupport, x});
  std::vector<VertexId> vertices(x.begin(), x.end());
  std::vector<Edge> edges;
  for (const Edge& e : g.graph().edges()) {
    if (x.contains(e.u) && x.contains(e.v)) edges.push_back(e);
  }
  VertexSet terminals;
  for (const VertexId& t : g.terminals()) {
    if (x.contains(t)) terminals.insert(t);
  }
  return Graft(Multigraph(std::move(vertices), std::move(edges)), std::move(terminals));
}

inline OrderedBipartiteGraft restrict_graft(const OrderedBipartiteGraft& g, const VertexSet& x) {
  Graft sub = restrict_graft(g.graft(), x);
  VertexSet spine, tooth;
  for (const VertexId& v : x) (g.spine().contains(v) ? spine : tooth).insert(v);
  return OrderedBipartiteGraft(std::move(sub), std::move(spine), std::move(tooth));
}

// Smallest "X#k" not already used as a vertex id.
inline VertexId default_contracted_id(const Multigraph& graph) {
  for (std::size_t k = 0;; ++k) {
    VertexId id = "X#" + std::to_string(k);
    if (!graph.has_vertex(id)) return id;
  }
}

struct Contraction {
  Graft graft;
  VertexId vertex;
};

// (G, T)/X. Edges inside X are dropped, edges leaving X are re-attached to
// the new vertex (parallel edges are kept), and the new vertex is a
// terminal iff |X ∩ T| is odd.
inline Contraction contract_graft(const Graft& g, const VertexSet& x,
                                  std::optional<VertexId> contracted_id = std::nullopt) {
  require_subset(g.graph(), {VertexSetRole::kContractionTarget, x});
  if (x.empty()) {
    throw GraftError(ErrorKind::kPrecondition, "contraction target must be nonempty");
  }
  VertexId id = contracted_id ? *contracted_id : default_contracted_id(g.graph());
  if (g.graph().has_vertex(id) && !x.contains(id)) {
    throw GraftError(ErrorKind::kPrecondition, "contracted vertex id '" + id + "' is already in use");
  }
  std::vector<VertexId> vertices;
  for (const VertexId& v : g.graph().vertices()) {
    if (!x.contains(v)) vertices.push_back(v);
  }
  vertices.push_back(id);
  std::vector<Edge> edges;
  for (const Edge& e : g.graph().edges()) {
    bool u_in = x.contains(e.u);
    bool v_in = x.contains(e.v);
    if (u_in && v_in) continue;
    edges.push_back({e.id, u_in ? id : e.u, v_in ? id : e.v});
  }
  VertexSet terminals;
  bool odd = false;
  for (const VertexId& t : g.terminals()) {
    if (x.contains(t)) {
      odd = !odd;
    } else {
      terminals.insert(t);
    }
  }
  if (odd) terminals.insert(id);
  return {Graft(Multigraph(std::move(vertices), std::move(edges)), std::move(terminals)), id};
}

// (G1 + G2, T1 Δ T2; A1 ∪ A2, B1 ∪ B2). Requires A1 ∩ B2 = A2 ∩ B1 = ∅. An
// edge id present in both operands must have the same endpoints and is
// taken once.
inline OrderedBipartiteGraft graft_sum(const OrderedBipartiteGraft& g1,
                                       const OrderedBipartiteGraft& g2) {
  for (const VertexId& a : g1.spine()) {
    if (g2.tooth().contains(a)) {
      throw GraftError(ErrorKind::kPrecondition, "side clash: '" + a + "' is spine in the first operand and tooth in the second");
    }
  }
  for (const VertexId& a : g2.spine()) {
    if (g1.tooth().contains(a)) {
      throw GraftError(ErrorKind::kPrecondition, "side clash: '" + a + "' is spine in the second operand and tooth in the first");
    }
  }
  VertexSet vertex_union(g1.graph().vertices().begin(), g1.graph().vertices().end());
  vertex_union.insert(g2.graph().vertices().begin(), g2.graph().vertices().end());
  std::vector<Edge> edges = g1.graph().edges();
  for (const Edge& e : g2.graph().edges()) {
    if (auto i = g1.graph().find_edge(e.id)) {
      const Edge& other = g1.graph().edge(*i);
      bool same = (other.u == e.u && other.v == e.v) || (other.u == e.v && other.v == e.u);
      if (!same) {
        throw GraftError(ErrorKind::kValidation,
                         "edge id '" + e.id + "' names different edges in the two operands");
      }
      continue;
    }
    edges.push_back(e);
  }
  VertexSet terminals;
  std::set_symmetric_difference(g1.terminals().begin(), g1.terminals().end(),
                                g2.terminals().begin(), g2.terminals().end(),
                                std::inserter(terminals, terminals.end()));
  VertexSet spine = g1.spine();
  spine.insert(g2.spine().begin(), g2.spine().end());
  VertexSet tooth = g1.tooth();
  tooth.insert(g2.tooth().begin(), g2.tooth().end());
  return build_bipartite_graft(
      Multigraph(std::vector<VertexId>(vertex_union.begin(), vertex_union.end()), std::move(edges)),
      std::move(terminals), std::move(spine), std::move(tooth));
}

// ({r}, ∅; ∅, {r}), the seed of every graft ear decomposition.
inline OrderedBipartiteGraft singleton_root(const VertexId& r) {
  return OrderedBipartiteGraft(Graft(Multigraph({r}, {}), {}), {}, {r});
}

}  // namespace grafts

#endif  // GRAFTS_GRAFT_HPP_
