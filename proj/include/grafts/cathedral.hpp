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

// Critical sets and the cathedral order over the factor-components of a
// comb.
//
// For a factor-component G0 of a comb (G, T; A, B), a separating set
// X ⊇ V(G0) is critical when (G, T)[X]/V(G0) is a critical quasicomb rooted
// at the contracted vertex g0, with g0 on the tooth side. G1 ⪯ G2 iff some
// critical set for G1 contains V(G2). The order is decided here by
// enumerating unions of factor-components, so it is meant for small
// instances.

#ifndef GRAFTS_CATHEDRAL_HPP_
#define GRAFTS_CATHEDRAL_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grafts/comb.hpp"
#include "grafts/decomposition.hpp"
#include "grafts/graft.hpp"
#include "grafts/join.hpp"

namespace grafts {

inline constexpr std::size_t kDefaultMaxComponents = 12;

struct CriticalSetCertificate {
  ComponentId base;
  VertexSet vertices;
  std::vector<ComponentId> witness;
  std::optional<OrderedBipartiteGraft> contracted;
  VertexId root;  // the contracted vertex g0
  std::map<VertexId, Distance> distance_to_root;
  std::string reason;  // empty when the set is critical
};

struct CriticalSetResult {
  bool critical = false;
  CriticalSetCertificate certificate;
};

// A comb together with its factor-components, computed once.
class CombAnalysis {
 public:
  explicit CombAnalysis(OrderedBipartiteGraft comb) : comb_(std::move(comb)) {
    if (classify_comb(comb_).kind != CombKind::kComb) {
      throw GraftError(ErrorKind::kPrecondition, "graft is not a comb");
    }
    components_ = factor_components(comb_.graft());
  }

  const OrderedBipartiteGraft& comb() const { return comb_; }
  const FactorComponentSet& components() const { return components_; }

  std::size_t index(const ComponentId& id) const {
    auto i = components_.find(id);
    if (!i) throw GraftError(ErrorKind::kInput, "unknown factor-component '" + id + "'");
    return *i;
  }

 private:
  OrderedBipartiteGraft comb_;
  FactorComponentSet components_;
};

inline CriticalSetResult is_critical_set(const CombAnalysis& analysis, const ComponentId& base, const VertexSet& x) {
  const OrderedBipartiteGraft& g = analysis.comb();
  const FactorComponent& g0 = analysis.components().components()[analysis.index(base)];
  require_subset(g.graph(), {VertexSetRole::kSeparatingCandidate, x});
  CriticalSetResult result;
  CriticalSetCertificate& cert = result.certificate;
  cert.base = base;
  cert.vertices = x;
  SeparatingCheck sep = is_separating(analysis.components(), x);
  if (!sep.separating) {
    cert.reason = "vertex set is not separating";
    return result;
  }
  cert.witness = sep.witness;
  if (!std::includes(x.begin(), x.end(), g0.vertices.begin(), g0.vertices.end())) {
    cert.reason = "vertex set does not contain the base component";
    return result;
  }
  for (const Edge& e : g.graph().edges()) {
    for (auto [a, b] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      if (g.spine().contains(a) && g0.vertices.contains(a) && x.contains(b) && !g0.vertices.contains(b)) {
        cert.reason = "edge '" + e.id + "' joins the base spine to a tooth vertex outside the base";
        return result;
      }
    }
  }
  Graft induced = restrict_graft(g.graft(), x);
  Contraction contraction = contract_graft(induced, g0.vertices);
  cert.root = contraction.vertex;
  VertexSet spine, tooth{contraction.vertex};
  for (const VertexId& v : x) {
    if (g0.vertices.contains(v)) continue;
    (g.spine().contains(v) ? spine : tooth).insert(v);
  }
  OrderedBipartiteGraft contracted(std::move(contraction.graft), std::move(spine), std::move(tooth));
  CriticalCheck check = is_critical_quasicomb(contracted, cert.root);
  cert.distance_to_root = std::move(check.distance_to_root);
  cert.contracted = std::move(contracted);
  result.critical = check.critical;
  if (!check.critical) cert.reason = check.quasicomb ? "contraction is not critical" : "contraction is not a quasicomb";
  return result;
}

inline CriticalSetResult is_critical_set(const OrderedBipartiteGraft& comb, const ComponentId& base,
                                         const VertexSet& x) {
  return is_critical_set(CombAnalysis(comb), base, x);
}

namespace detail {

inline VertexSet union_of(const FactorComponentSet& components, std::uint64_t bits) {
  VertexSet out;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if ((bits >> i) & 1U) out.insert(components.components()[i].vertices.begin(), components.components()[i].vertices.end());
  }
  return out;
}

// Bit masks over component indices of every critical set for `base`,
// ascending.
inline std::vector<std::uint64_t> critical_set_masks(const CombAnalysis& analysis, std::size_t base,
                                                     std::size_t max_components) {
  const FactorComponentSet& comps = analysis.components();
  const std::size_t k = comps.size();
  if (k > max_components) {
    throw GraftError(ErrorKind::kCapacity, "critical-set enumeration is limited to " +
                                               std::to_string(max_components) + " factor-components, got " +
                                               std::to_string(k));
  }
  std::vector<std::uint64_t> out;
  const std::uint64_t total = std::uint64_t{1} << k;
  const ComponentId& id = comps.components()[base].id;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    if (!((bits >> base) & 1U)) continue;
    if (is_critical_set(analysis, id, union_of(comps, bits)).critical) out.push_back(bits);
  }
  return out;
}

}  // namespace detail

// Critical sets as sorted component-id lists, deduplicated and ordered by
// size, then lexicographically.
inline std::vector<std::vector<ComponentId>> enumerate_critical_sets(
    const CombAnalysis& analysis, const ComponentId& base, std::size_t max_components = kDefaultMaxComponents) {
  std::vector<std::vector<ComponentId>> out;
  for (std::uint64_t bits : detail::critical_set_masks(analysis, analysis.index(base), max_components)) {
    std::vector<ComponentId> ids;
    for (std::size_t i = 0; i < analysis.components().size(); ++i) {
      if ((bits >> i) & 1U) ids.push_back(analysis.components().components()[i].id);
    }
    std::sort(ids.begin(), ids.end());
    out.push_back(std::move(ids));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline VertexSet vertices_of(const CombAnalysis& analysis, const std::vector<ComponentId>& ids) {
  VertexSet out;
  for (const ComponentId& id : ids) {
    const FactorComponent& c = analysis.components().components()[analysis.index(id)];
    out.insert(c.vertices.begin(), c.vertices.end());
  }
  return out;
}

// The first critical set for `lower` (in enumeration order) containing
// V(upper), if any.
inline std::optional<VertexSet> precedence_certificate(const CombAnalysis& analysis, const ComponentId& lower,
                                                       const ComponentId& upper,
                                                       std::size_t max_components = kDefaultMaxComponents) {
  std::size_t hi = analysis.index(upper);
  for (std::uint64_t bits : detail::critical_set_masks(analysis, analysis.index(lower), max_components)) {
    if ((bits >> hi) & 1U) return detail::union_of(analysis.components(), bits);
  }
  return std::nullopt;
}

inline bool precedes(const CombAnalysis& analysis, const ComponentId& lower, const ComponentId& upper,
                     std::size_t max_components = kDefaultMaxComponents) {
  return precedence_certificate(analysis, lower, upper, max_components).has_value();
}

inline bool precedes(const OrderedBipartiteGraft& comb, const ComponentId& lower, const ComponentId& upper) {
  return precedes(CombAnalysis(comb), lower, upper);
}

struct CathedralPoset {
  std::vector<ComponentId> ids;
  std::vector<std::vector<char>> relation;  // relation[i][j]: ids[i] ⪯ ids[j]
  std::vector<std::pair<ComponentId, ComponentId>> hasse;
  std::map<ComponentId, int> heights;
  // certificates[i][j]: a critical set for ids[i] containing ids[j].
  std::vector<std::vector<std::optional<VertexSet>>> certificates;

  bool leq(const ComponentId& a, const ComponentId& b) const {
    auto ia = std::find(ids.begin(), ids.end(), a);
    auto ib = std::find(ids.begin(), ids.end(), b);
    if (ia == ids.end() || ib == ids.end()) throw GraftError(ErrorKind::kInput, "unknown factor-component");
    return relation[static_cast<std::size_t>(ia - ids.begin())][static_cast<std::size_t>(ib - ids.begin())];
  }
};

// The full order, its Hasse diagram and heights. A minimal element has
// height 1 and any other element one more than the least height among its
// lower covers. Throws kIntegrity if the relation is not a partial order.
inline CathedralPoset cathedral_poset(const CombAnalysis& analysis,
                                      std::size_t max_components = kDefaultMaxComponents) {
  const FactorComponentSet& comps = analysis.components();
  const std::size_t k = comps.size();
  CathedralPoset poset;
  poset.relation.assign(k, std::vector<char>(k, 0));
  poset.certificates.assign(k, std::vector<std::optional<VertexSet>>(k));
  for (const FactorComponent& c : comps.components()) poset.ids.push_back(c.id);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<std::uint64_t> sets = detail::critical_set_masks(analysis, i, max_components);
    for (std::size_t j = 0; j < k; ++j) {
      for (std::uint64_t bits : sets) {
        if ((bits >> j) & 1U) {
          poset.relation[i][j] = 1;
          poset.certificates[i][j] = detail::union_of(comps, bits);
          break;
        }
      }
    }
  }
  auto fail = [&](const std::string& what) {
    throw GraftError(ErrorKind::kIntegrity, "cathedral order is not a partial order: " + what);
  };
  for (std::size_t i = 0; i < k; ++i) {
    if (!poset.relation[i][i]) fail("'" + poset.ids[i] + "' is not related to itself");
    for (std::size_t j = 0; j < k; ++j) {
      if (i != j && poset.relation[i][j] && poset.relation[j][i]) {
        fail("'" + poset.ids[i] + "' and '" + poset.ids[j] + "' precede each other");
      }
      for (std::size_t l = 0; l < k; ++l) {
        if (poset.relation[i][j] && poset.relation[j][l] && !poset.relation[i][l]) {
          fail("transitivity fails at '" + poset.ids[i] + "', '" + poset.ids[j] + "', '" + poset.ids[l] + "'");
        }
      }
    }
  }
  std::vector<std::vector<std::size_t>> lower_covers(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j || !poset.relation[i][j]) continue;
      bool cover = true;
      for (std::size_t l = 0; l < k && cover; ++l) {
        if (l != i && l != j && poset.relation[i][l] && poset.relation[l][j]) cover = false;
      }
      if (cover) {
        poset.hasse.emplace_back(poset.ids[i], poset.ids[j]);
        lower_covers[j].push_back(i);
      }
    }
  }
  // Heights in an order compatible with ⪯: fewer strict predecessors first.
  std::vector<std::size_t> order(k);
  std::vector<std::size_t> below(k, 0);
  for (std::size_t j = 0; j < k; ++j) {
    order[j] = j;
    for (std::size_t i = 0; i < k; ++i) below[j] += (i != j && poset.relation[i][j]) ? 1 : 0;
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return below[a] < below[b]; });
  std::vector<int> height(k, 0);
  for (std::size_t j : order) {
    int h = 1;
    if (!lower_covers[j].empty()) {
      h = height[lower_covers[j].front()];
      for (std::size_t i : lower_covers[j]) h = std::min(h, height[i]);
      ++h;
    }
    height[j] = h;
    poset.heights[poset.ids[j]] = h;
  }
  return poset;
}

inline CathedralPoset cathedral_poset(const OrderedBipartiteGraft& comb) { return cathedral_poset(CombAnalysis(comb)); }

struct UnionCheck {
  bool ok = false;
  std::string reason;
};

// For X critical for G1 with V(G2) ⊆ X and Y critical for G2 with
// V(G3) ⊆ Y: X ∪ Y is critical for G1 and contains V(G3).
inline UnionCheck union_criticality_check(const CombAnalysis& analysis, const ComponentId& g1, const ComponentId& g2,
                                          const ComponentId& g3, const VertexSet& x, const VertexSet& y) {
  const auto& comps = analysis.components().components();
  const VertexSet& v2 = comps[analysis.index(g2)].vertices;
  const VertexSet& v3 = comps[analysis.index(g3)].vertices;
  if (!is_critical_set(analysis, g1, x).critical) return {false, "precondition: X is not critical for G1"};
  if (!std::includes(x.begin(), x.end(), v2.begin(), v2.end())) return {false, "precondition: X does not contain G2"};
  if (!is_critical_set(analysis, g2, y).critical) return {false, "precondition: Y is not critical for G2"};
  if (!std::includes(y.begin(), y.end(), v3.begin(), v3.end())) return {false, "precondition: Y does not contain G3"};
  VertexSet xy = x;
  xy.insert(y.begin(), y.end());
  if (!is_critical_set(analysis, g1, xy).critical) return {false, "X ∪ Y is not critical for G1"};
  return {true, {}};
}

struct UpperPair {
  VertexSet component;   // K
  VertexSet neighbours;  // N(K) ∩ V(G0)
  std::optional<VertexSet> kl_class;  // S, when one exists
};

struct UpperBoundReport {
  bool ok = true;
  ComponentId base;
  VertexSet upper;  // U
  std::vector<UpperPair> pairs;
  std::vector<std::string> violations;
};

// For each connected component K of G[U], U the union of the strict upper
// bounds of G0, looks for a Kotzig-Lovász class S ⊆ B of G0 containing
// N(K) ∩ V(G0).
inline UpperBoundReport upper_bound_check(const CombAnalysis& analysis, const CathedralPoset& poset,
                                          const KLPartition& kl, const ComponentId& base) {
  const OrderedBipartiteGraft& g = analysis.comb();
  const Multigraph& graph = g.graph();
  const auto& comps = analysis.components().components();
  const std::size_t b = analysis.index(base);
  const VertexSet& v0 = comps[b].vertices;
  UpperBoundReport report;
  report.base = base;
  for (std::size_t j = 0; j < comps.size(); ++j) {
    if (j != b && poset.relation[b][j]) report.upper.insert(comps[j].vertices.begin(), comps[j].vertices.end());
  }
  IndexMask inside = graph.vertex_mask(report.upper);
  IndexMask edges(graph.edge_count(), 0);
  for (std::size_t e = 0; e < graph.edge_count(); ++e) {
    auto [u, v] = graph.ends(e);
    edges[e] = inside[u] && inside[v];
  }
  std::vector<std::size_t> label = detail::component_labels(graph, &edges);
  std::map<std::size_t, UpperPair> by_label;
  for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
    if (inside[v]) by_label[label[v]].component.insert(graph.vertex(v));
  }
  for (auto& [l, pair] : by_label) {
    for (const VertexId& x : pair.component) {
      for (const Incidence& inc : graph.incidences(graph.vertex_index(x))) {
        const VertexId& y = graph.vertex(inc.other);
        if (v0.contains(y)) pair.neighbours.insert(y);
      }
    }
    std::vector<std::string> names;
    for (const VertexSet& s : kl_classes_of_component(kl, base)) {
      bool tooth_only = std::all_of(s.begin(), s.end(), [&](const VertexId& v) { return g.tooth().contains(v); });
      if (tooth_only && std::includes(s.begin(), s.end(), pair.neighbours.begin(), pair.neighbours.end())) {
        pair.kl_class = s;
        break;
      }
    }
    if (!pair.kl_class) {
      report.ok = false;
      std::string k;
      for (const VertexId& v : pair.component) k += (k.empty() ? "" : ",") + v;
      report.violations.push_back("no tooth-side class of '" + base + "' contains the neighbours of {" + k + "}");
    }
    report.pairs.push_back(std::move(pair));
  }
  return report;
}

inline UpperBoundReport upper_bound_check(const CombAnalysis& analysis, const ComponentId& base) {
  return upper_bound_check(analysis, cathedral_poset(analysis), kl_partition(analysis.comb().graft(), analysis.components()),
                           base);
}

struct RoundEarBondCheck {
  bool ok = false;
  VertexId s, t;
  Distance distance;
};

// For an F-balanced round ear P relative to the factor-component H: both
// bonds lie in B ∩ V(H) and are at F-distance 0.
inline RoundEarBondCheck round_ear_bond_check(const CombAnalysis& analysis, const JoinSet& join,
                                              const ComponentId& h, const WeightedWalkReport& ear) {
  const OrderedBipartiteGraft& g = analysis.comb();
  const VertexSet& vh = analysis.components().components()[analysis.index(h)].vertices;
  detail::WalkIndices w = detail::resolve_walk(g.graph(), ear);
  std::vector<VertexId> bonds;
  for (const VertexId& v : ear.vertices) {
    if (vh.contains(v)) bonds.push_back(v);
  }
  bool shape = false;
  if (w.circuit) {
    shape = bonds.size() == 1;
  } else {
    shape = bonds.size() == 2 && vh.contains(ear.vertices.front()) && vh.contains(ear.vertices.back());
  }
  if (!shape) throw GraftError(ErrorKind::kPrecondition, "walk is not a round ear relative to the component");
  if (!is_f_balanced(g, join.edges(), ear, WalkShape::kEar, vh)) {
    throw GraftError(ErrorKind::kPrecondition, "round ear is not F-balanced");
  }
  RoundEarBondCheck out;
  out.s = bonds.front();
  out.t = bonds.back();
  out.distance = f_distance(g.graft(), out.s, out.t);
  out.ok = g.tooth().contains(out.s) && g.tooth().contains(out.t) && out.distance.value == 0;
  return out;
}

}  // namespace grafts

#endif  // GRAFTS_CATHEDRAL_HPP_
