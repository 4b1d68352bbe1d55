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

// Allowed edges, factor-components, separating sets and the general
// Kotzig-Lovász partition.

#ifndef GRAFTS_DECOMPOSITION_HPP_
#define GRAFTS_DECOMPOSITION_HPP_

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "grafts/graft.hpp"
#include "grafts/join.hpp"

namespace grafts {

using ComponentId = std::string;

struct FactorComponent {
  ComponentId id;  // least vertex id inside
  VertexSet vertices;
  EdgeSet allowed_edges;

  friend bool operator==(const FactorComponent&, const FactorComponent&) = default;
};

class FactorComponentSet {
 public:
  FactorComponentSet() = default;
  FactorComponentSet(std::vector<FactorComponent> components, std::map<VertexId, std::size_t> owner)
      : components_(std::move(components)), owner_(std::move(owner)) {}

  const std::vector<FactorComponent>& components() const { return components_; }
  std::size_t size() const { return components_.size(); }

  const FactorComponent& of_vertex(const VertexId& v) const {
    auto it = owner_.find(v);
    if (it == owner_.end()) throw GraftError(ErrorKind::kInput, "unknown vertex '" + v + "'");
    return components_[it->second];
  }
  std::size_t index_of_vertex(const VertexId& v) const {
    auto it = owner_.find(v);
    if (it == owner_.end()) throw GraftError(ErrorKind::kInput, "unknown vertex '" + v + "'");
    return it->second;
  }
  std::optional<std::size_t> find(const ComponentId& id) const {
    for (std::size_t i = 0; i < components_.size(); ++i) {
      if (components_[i].id == id) return i;
    }
    return std::nullopt;
  }
  const FactorComponent& at(const ComponentId& id) const {
    auto i = find(id);
    if (!i) throw GraftError(ErrorKind::kInput, "unknown factor-component '" + id + "'");
    return components_[*i];
  }

 private:
  std::vector<FactorComponent> components_;
  std::map<VertexId, std::size_t> owner_;
};

namespace detail {

inline IndexMask allowed_edge_mask(const Multigraph& graph, const IndexMask& terminals) {
  auto nu_t = nu(graph, terminals);
  if (!nu_t) throw GraftError(ErrorKind::kPrecondition, "not a graft");
  IndexMask allowed(graph.edge_count(), 0);
  for (std::size_t e = 0; e < graph.edge_count(); ++e) {
    allowed[e] = is_allowed_edge(graph, terminals, *nu_t, e) ? 1 : 0;
  }
  return allowed;
}

inline FactorComponentSet components_from_allowed(const Multigraph& graph, const IndexMask& allowed) {
  std::vector<std::size_t> label = component_labels(graph, &allowed);
  // Vertices are sorted by id, so label order is least-vertex-id order.
  std::size_t count = 0;
  for (std::size_t l : label) count = std::max(count, l + 1);
  std::vector<FactorComponent> components(count);
  std::map<VertexId, std::size_t> owner;
  for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
    FactorComponent& c = components[label[v]];
    if (c.vertices.empty()) c.id = graph.vertex(v);
    c.vertices.insert(graph.vertex(v));
    owner.emplace(graph.vertex(v), label[v]);
  }
  for (std::size_t e = 0; e < graph.edge_count(); ++e) {
    if (allowed[e]) components[label[graph.ends(e).first]].allowed_edges.insert(graph.edge(e).id);
  }
  return FactorComponentSet(std::move(components), std::move(owner));
}

}  // namespace detail

inline EdgeSet allowed_edge_set(const Graft& g) {
  return g.graph().edge_ids(detail::allowed_edge_mask(g.graph(), g.terminal_mask()));
}

// Connected components of (V, allowed edges); vertices without allowed
// edges form singleton components.
inline FactorComponentSet factor_components(const Graft& g) {
  return detail::components_from_allowed(g.graph(), detail::allowed_edge_mask(g.graph(), g.terminal_mask()));
}

struct SeparatingCheck {
  bool separating = false;
  std::vector<ComponentId> witness;  // components whose union is X
};

inline SeparatingCheck is_separating(const FactorComponentSet& components, const VertexSet& x) {
  SeparatingCheck check;
  std::vector<char> touched(components.size(), 0);
  for (const VertexId& v : x) touched[components.index_of_vertex(v)] = 1;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (!touched[i]) continue;
    const FactorComponent& c = components.components()[i];
    if (!std::includes(x.begin(), x.end(), c.vertices.begin(), c.vertices.end())) return {};
    check.witness.push_back(c.id);
  }
  check.separating = true;
  return check;
}

inline SeparatingCheck is_separating(const Graft& g, const VertexSet& x) {
  require_subset(g.graph(), {VertexSetRole::kSeparatingCandidate, x});
  return is_separating(factor_components(g), x);
}

// (G, T)[X] for a separating X.
inline Graft induced_subgraft(const Graft& g, const VertexSet& x) {
  if (!is_separating(g, x).separating) {
    throw GraftError(ErrorKind::kPrecondition, "vertex set is not separating");
  }
  return restrict_graft(g, x);
}

inline OrderedBipartiteGraft induced_subgraft(const OrderedBipartiteGraft& g, const VertexSet& x) {
  if (!is_separating(g.graft(), x).separating) {
    throw GraftError(ErrorKind::kPrecondition, "vertex set is not separating");
  }
  return restrict_graft(g, x);
}

struct KLPartition {
  std::vector<VertexSet> classes;  // sorted by least member
  std::map<VertexId, std::size_t> class_of;
  std::map<ComponentId, std::vector<std::size_t>> classes_by_component;
};

// u ~ v iff u = v, or u and v share a factor-component and
// nu(G, T Δ {u, v}) = nu(G, T). The relation is audited for transitivity.
inline KLPartition kl_partition(const Graft& g, const FactorComponentSet& components) {
  const Multigraph& graph = g.graph();
  const int nu_t = *detail::nu(graph, g.terminal_mask());
  const std::size_t n = graph.vertex_count();
  std::vector<std::vector<char>> related(n, std::vector<char>(n, 0));
  std::vector<std::size_t> comp(n);
  for (std::size_t v = 0; v < n; ++v) comp[v] = components.index_of_vertex(graph.vertex(v));
  for (std::size_t u = 0; u < n; ++u) {
    related[u][u] = 1;
    for (std::size_t v = u + 1; v < n; ++v) {
      if (comp[u] != comp[v]) continue;
      auto d = detail::raw_distance(graph, g.terminal_mask(), nu_t, u, v);
      related[u][v] = related[v][u] = (d && *d == 0) ? 1 : 0;
    }
  }
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (!related[u][v]) continue;
      for (std::size_t w = 0; w < n; ++w) {
        if (related[v][w] && !related[u][w]) {
          throw GraftError(ErrorKind::kIntegrity, "Kotzig-Lovász relation is not transitive at '" +
                                                      graph.vertex(u) + "', '" + graph.vertex(v) + "', '" +
                                                      graph.vertex(w) + "'");
        }
      }
    }
  }
  KLPartition part;
  std::vector<std::size_t> class_index(n, detail::kNone);
  for (std::size_t u = 0; u < n; ++u) {
    if (class_index[u] != detail::kNone) continue;
    VertexSet members;
    for (std::size_t v = u; v < n; ++v) {
      if (related[u][v]) {
        class_index[v] = part.classes.size();
        members.insert(graph.vertex(v));
      }
    }
    for (const VertexId& m : members) part.class_of.emplace(m, part.classes.size());
    part.classes_by_component[components.components()[comp[u]].id].push_back(part.classes.size());
    part.classes.push_back(std::move(members));
  }
  return part;
}

inline KLPartition kl_partition(const Graft& g) { return kl_partition(g, factor_components(g)); }

inline std::vector<VertexSet> kl_classes_of_component(const KLPartition& part, const ComponentId& id) {
  auto it = part.classes_by_component.find(id);
  if (it == part.classes_by_component.end()) {
    throw GraftError(ErrorKind::kInput, "unknown factor-component '" + id + "'");
  }
  std::vector<VertexSet> out;
  for (std::size_t i : it->second) out.push_back(part.classes[i]);
  return out;
}

}  // namespace grafts

#endif  // GRAFTS_DECOMPOSITION_HPP_
