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

// Randomised property suite over generated instances.
//
// Every trial draws its instance from its own seed, derived from the suite
// seed, the property and the trial number, so a failing trial is
// reproduced by that seed alone; counterexamples also carry the instance
// itself as a graft document.

#ifndef GRAFTS_PROPERTIES_HPP_
#define GRAFTS_PROPERTIES_HPP_

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "grafts/cathedral.hpp"
#include "grafts/comb.hpp"
#include "grafts/decomposition.hpp"
#include "grafts/generate.hpp"
#include "grafts/graft.hpp"
#include "grafts/io.hpp"
#include "grafts/join.hpp"
#include "grafts/oracle.hpp"

namespace grafts {

struct PropertyStats {
  std::string name;
  std::size_t trials = 0;     // instances examined
  std::size_t checks = 0;     // individual assertions
  std::size_t failures = 0;   // failed assertions
  std::size_t attempts = 0;   // generator samples drawn, where applicable
};

struct Counterexample {
  std::string property;
  std::uint64_t seed = 0;
  std::string message;
  Json instance;
  bool flipped = false;  // produced with the distance sign flipped
};

struct SuiteReport {
  std::vector<PropertyStats> properties;
  std::vector<Counterexample> certificates;
  double wall_seconds = 0;

  std::size_t failures() const {
    std::size_t total = 0;
    for (const PropertyStats& p : properties) total += p.failures;
    return total;
  }
  bool ok() const { return failures() == 0; }

  const PropertyStats* find(const std::string& name) const {
    for (const PropertyStats& p : properties) {
      if (p.name == name) return &p;
    }
    return nullptr;
  }
};

inline Json to_json(const SuiteReport& r) {
  Json doc = report_envelope("property-suite");
  doc["ok"] = r.ok();
  doc["wall_seconds"] = r.wall_seconds;
  doc["properties"] = Json::array();
  for (const PropertyStats& p : r.properties) {
    doc["properties"].push_back({{"name", p.name},
                                 {"trials", p.trials},
                                 {"checks", p.checks},
                                 {"failures", p.failures},
                                 {"attempts", p.attempts}});
  }
  doc["certificates"] = Json::array();
  for (const Counterexample& c : r.certificates) {
    doc["certificates"].push_back(
        {{"property", c.property}, {"seed", c.seed}, {"flip_distance_sign", c.flipped}, {"message", c.message},
         {"instance", c.instance}});
  }
  return doc;
}

struct SuiteOptions {
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  // Report distances with the opposite sign (mutation test hook).
  bool flip_distance_sign = false;
  std::size_t max_certificates = 16;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t trial_seed(std::uint64_t suite_seed, const std::string& corpus, std::size_t trial) {
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : corpus) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ULL;
  return splitmix64(suite_seed ^ splitmix64(h ^ splitmix64(trial)));
}

// Collects assertion outcomes for one property.
class Recorder {
 public:
  Recorder(PropertyStats& stats, SuiteReport& report, std::size_t max_certificates)
      : stats_(stats), report_(report), max_certificates_(max_certificates) {}

  void begin_trial(std::uint64_t seed, Json instance) {
    seed_ = seed;
    instance_ = std::move(instance);
    failed_this_trial_ = false;
    ++stats_.trials;
  }

  bool check(bool condition, const std::string& message) {
    ++stats_.checks;
    if (condition) return true;
    ++stats_.failures;
    if (!failed_this_trial_ && report_.certificates.size() < max_certificates_) {
      report_.certificates.push_back({stats_.name, seed_, message, instance_, engine_config().flip_distance_sign});
    }
    failed_this_trial_ = true;
    return false;
  }

  void attempts(std::size_t n) { stats_.attempts += n; }

 private:
  PropertyStats& stats_;
  SuiteReport& report_;
  std::size_t max_certificates_;
  std::uint64_t seed_ = 0;
  Json instance_;
  bool failed_this_trial_ = false;
};

inline std::string pair_text(const VertexId& u, const VertexId& v) { return "(" + u + ", " + v + ")"; }

// ---------------------------------------------------------------------------
// Instance sources.

inline GenConfig graft_config(std::size_t max_vertices, bool connected) {
  GenConfig cfg;
  cfg.min_vertices = 2;
  cfg.max_vertices = max_vertices;
  cfg.max_edges = 22;
  cfg.edge_density = 0.3;
  cfg.connected = connected;
  return cfg;
}

inline GenConfig comb_config(std::size_t max_vertices, std::size_t min_components, std::size_t max_components) {
  GenConfig cfg;
  cfg.mode = GenMode::kComb;
  cfg.min_vertices = 2;
  cfg.max_vertices = max_vertices;
  cfg.edge_density = 0.35;
  cfg.retry_budget = 20000;
  cfg.min_components = min_components;
  cfg.max_components = max_components;
  return cfg;
}

inline GenConfig critical_config(std::size_t max_vertices) {
  GenConfig cfg;
  cfg.mode = GenMode::kCriticalQuasicomb;
  cfg.min_vertices = 2;
  cfg.max_vertices = max_vertices;
  cfg.edge_density = 0.35;
  cfg.connected = true;
  cfg.retry_budget = 20000;
  return cfg;
}

// ---------------------------------------------------------------------------
// Join engine.

inline void prop_oracle_equivalence(Rng& rng, Recorder& rec, std::uint64_t seed) {
  Graft g = gen_random_graft(rng, graft_config(12, false));
  rec.begin_trial(seed, to_json(g));
  JoinSet fast = min_join(g);
  JoinSet slow = min_join_bruteforce(g);
  auto oracle_nu = oracle::nu(g.graph(), g.terminal_mask());
  rec.check(fast.size() == slow.size(), "matching join size " + std::to_string(fast.size()) +
                                            " differs from brute force " + std::to_string(slow.size()));
  rec.check(oracle_nu && static_cast<std::size_t>(*oracle_nu) == slow.size(), "enumerated nu disagrees");
}

// f_distance equals the minimum F-weight of a u-v path for several
// minimum joins F; also symmetry, d(u,u) = 0 and extracted path weights.
inline void prop_distance_formula(Rng& rng, Recorder& rec, std::uint64_t seed) {
  std::optional<Graft> picked;
  std::vector<std::uint64_t> joins;
  std::size_t attempts = 0;
  while (!picked) {
    ++attempts;
    Graft g = gen_random_graft(rng, graft_config(12, true));
    joins = oracle::all_minimum_joins(g.graph(), g.terminal_mask());
    if (joins.size() >= 2) picked = std::move(g);
  }
  rec.attempts(attempts);
  const Graft& g = *picked;
  const Multigraph& graph = g.graph();
  rec.begin_trial(seed, to_json(g));
  std::vector<std::uint64_t> chosen{joins.front(), joins.back()};
  if (joins.size() > 2) chosen.push_back(joins[joins.size() / 2]);
  const std::size_t n = graph.vertex_count();
  std::vector<std::vector<Distance>> dist(n, std::vector<Distance>(n));
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) dist[u][v] = f_distance(g, graph.vertex(u), graph.vertex(v));
  }
  for (std::size_t u = 0; u < n; ++u) {
    rec.check(dist[u][u].value == 0, "d(u,u) != 0 at " + graph.vertex(u));
    for (std::size_t v = u + 1; v < n; ++v) {
      rec.check(dist[u][v] == dist[v][u], "distance not symmetric at " + pair_text(graph.vertex(u), graph.vertex(v)));
    }
  }
  for (std::uint64_t bits : chosen) {
    IndexMask mask = detail::mask_from_bits(bits, graph.edge_count());
    JoinSet f = JoinSet::from_mask(g, mask);
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) {
        auto brute = oracle::min_path_weight(graph, mask, u, v);
        const std::string where = pair_text(graph.vertex(u), graph.vertex(v));
        if (!rec.check(brute == dist[u][v].value, "f_distance " + to_string(dist[u][v]) +
                                                      " differs from path minimum at " + where)) {
          return;
        }
        WeightedWalkReport p = extract_shortest_path(g, f, graph.vertex(u), graph.vertex(v));
        rec.check(dist[u][v].value == p.weight, "extracted path weight differs from f_distance at " + where);
      }
    }
  }
}

// In a factor-connected graft every distance is at most 0; checked on the
// factor-components of random grafts.
inline void prop_nonpositive_distance(Rng& rng, Recorder& rec, std::uint64_t seed) {
  Graft g = gen_random_graft(rng, graft_config(10, true));
  rec.begin_trial(seed, to_json(g));
  FactorComponentSet comps = factor_components(g);
  for (const FactorComponent& h : comps.components()) {
    Graft sub = induced_subgraft(g, h.vertices);
    rec.check(factor_components(sub).size() == 1, "factor-component " + h.id + " is not factor-connected alone");
    for (const VertexId& u : h.vertices) {
      for (const VertexId& v : h.vertices) {
        if (u >= v) continue;
        Distance d = f_distance(sub, u, v);
        if (!rec.check(d.value && *d.value <= 0, "distance " + to_string(d) + " > 0 at " + pair_text(u, v))) return;
      }
    }
  }
}

// Zero-weight circuits: F Δ C is again minimum and C consists of
// allowed edges; minimum joins have no negative circuit, and a join made
// non-minimum yields a negative circuit diagnostic.
inline void prop_circuits(Rng& rng, Recorder& rec, std::uint64_t seed) {
  Graft g = gen_random_graft(rng, graft_config(8, true));
  rec.begin_trial(seed, to_json(g));
  const Multigraph& graph = g.graph();
  JoinSet f = min_join(g);
  IndexMask allowed = detail::allowed_edge_mask(graph, g.terminal_mask());
  IndexMask oracle_allowed = oracle::allowed_edges(graph, g.terminal_mask());
  rec.check(allowed == oracle_allowed, "allowed edges differ from the union of all minimum joins");
  std::optional<std::vector<std::size_t>> positive;
  oracle::for_each_circuit(graph, [&](const oracle::IndexWalk& c) {
    int w = oracle::walk_weight(c, f.mask());
    rec.check(w >= 0, "negative circuit under a minimum join");
    if (w == 0) {
      IndexMask flipped = f.mask();
      for (std::size_t e : c.edges) {
        flipped[e] ^= 1;
        rec.check(allowed[e], "edge '" + graph.edge(e).id + "' of a zero-weight circuit is not allowed");
      }
      rec.check(is_join(graph, g.terminal_mask(), flipped) && detail::popcount(flipped) == f.size(),
                "F xor a zero-weight circuit is not a minimum join");
    }
    if (w > 0 && !positive) positive = c.edges;
    return true;
  });
  if (positive) {
    EdgeSet worse = f.edges();
    for (std::size_t e : *positive) {
      const EdgeId& id = graph.edge(e).id;
      if (!worse.erase(id)) worse.insert(id);
    }
    rec.check(!is_minimum_join(g, worse), "join of larger size reported minimum");
    auto c = find_negative_circuit(g, worse);
    rec.check(c && c->weight < 0, "no negative circuit found for a non-minimum join");
  } else {
    rec.check(!find_negative_circuit(g, f.edges()), "negative circuit reported for a minimum join");
  }
}

// ---------------------------------------------------------------------------
// Graft operations and decomposition.

inline void prop_graft_operations(Rng& rng, Recorder& rec, std::uint64_t seed) {
  GeneratedComb gc = gen_random_comb(rng, comb_config(10, 1, 64));
  rec.attempts(gc.attempts);
  const OrderedBipartiteGraft& g = gc.comb;
  const Multigraph& graph = g.graph();
  rec.begin_trial(seed, to_json(g));
  const JoinSet& f = gc.join;
  // Contraction: parity rule and F minus E[X] stays a join.
  VertexSet x;
  for (const VertexId& v : graph.vertices()) {
    if (rng.bernoulli(0.4)) x.insert(v);
  }
  if (x.empty()) x.insert(graph.vertex(0));
  Contraction c = contract_graft(g.graft(), x);
  rec.check(validate_graft(c.graft.graph(), c.graft.terminals()), "contraction is not a graft");
  EdgeSet outside;
  for (const Edge& e : graph.edges()) {
    if (!(x.contains(e.u) && x.contains(e.v)) && f.contains(e.id)) outside.insert(e.id);
  }
  rec.check(is_join(c.graft, outside), "F minus E[X] is not a join of the contraction");
  // Sum: split the edges and add minimum joins of the two parts.
  std::vector<Edge> e1, e2;
  for (const Edge& e : graph.edges()) (rng.bernoulli(0.5) ? e1 : e2).push_back(e);
  auto part = [&](const std::vector<Edge>& edges) {
    VertexSet vs, spine, tooth, terminals;
    std::map<VertexId, int> degree;
    for (const Edge& e : edges) {
      vs.insert(e.u);
      vs.insert(e.v);
      if (rng.bernoulli(0.5)) {
        degree[e.u] ^= 1;
        degree[e.v] ^= 1;
      }
    }
    for (const auto& [v, d] : degree) {
      if (d) terminals.insert(v);
    }
    for (const VertexId& v : vs) (g.spine().contains(v) ? spine : tooth).insert(v);
    return build_bipartite_graft(Multigraph(std::vector<VertexId>(vs.begin(), vs.end()), edges), terminals, spine,
                                 tooth);
  };
  OrderedBipartiteGraft g1 = part(e1);
  OrderedBipartiteGraft g2 = part(e2);
  OrderedBipartiteGraft sum = graft_sum(g1, g2);
  EdgeSet both = min_join(g1.graft()).edges();
  EdgeSet j2 = min_join(g2.graft()).edges();
  both.insert(j2.begin(), j2.end());
  rec.check(is_join(sum.graft(), both), "union of part joins is not a join of the sum");
  // Induced subgraft on a separating set: F ∩ E[X] is a join, δ(X) ∩ F = ∅.
  FactorComponentSet comps = factor_components(g.graft());
  VertexSet sep;
  for (const FactorComponent& h : comps.components()) {
    if (rng.bernoulli(0.5)) sep.insert(h.vertices.begin(), h.vertices.end());
  }
  rec.check(is_separating(comps, sep).separating, "union of components not separating");
  Graft sub = induced_subgraft(g.graft(), sep);
  EdgeSet inner;
  for (const Edge& e : graph.edges()) {
    bool in_u = sep.contains(e.u), in_v = sep.contains(e.v);
    if (in_u && in_v && f.contains(e.id)) inner.insert(e.id);
    if (in_u != in_v) rec.check(!f.contains(e.id), "minimum join crosses a separating set at '" + e.id + "'");
  }
  rec.check(is_join(sub, inner), "F restricted to a separating set is not a join of the induced subgraft");
}

inline void prop_kl_transitivity(Rng& rng, Recorder& rec, std::uint64_t seed) {
  Graft g = gen_random_graft(rng, graft_config(10, false));
  rec.begin_trial(seed, to_json(g));
  try {
    KLPartition part = kl_partition(g);
    rec.check(true, "");
    FactorComponentSet comps = factor_components(g);
    for (const VertexSet& cls : part.classes) {
      std::set<std::size_t> owners;
      for (const VertexId& v : cls) owners.insert(comps.index_of_vertex(v));
      rec.check(owners.size() == 1, "KL class spans several factor-components");
    }
  } catch (const GraftError& e) {
    rec.check(false, e.what());
  }
}

// ---------------------------------------------------------------------------
// Combs and quasicombs.

inline void prop_comb_distances(Rng& rng, Recorder& rec, std::uint64_t seed) {
  GeneratedComb gc = gen_random_comb(rng, comb_config(10, 1, 1));
  rec.attempts(gc.attempts);
  const OrderedBipartiteGraft& g = gc.comb;
  const Multigraph& graph = g.graph();
  rec.begin_trial(seed, to_json(g));
  rec.check(classify_comb(g).kind == CombKind::kComb, "generator emitted a non-comb");
  for (std::size_t u = 0; u < graph.vertex_count(); ++u) {
    for (std::size_t v = u + 1; v < graph.vertex_count(); ++v) {
      Distance d = f_distance(g.graft(), graph.vertex(u), graph.vertex(v));
      const std::string where = pair_text(graph.vertex(u), graph.vertex(v));
      bool ok = false;
      if (g.is_spine(u) && g.is_spine(v)) {
        ok = d.value == 0;
      } else if (g.is_tooth(u) && g.is_tooth(v)) {
        ok = d.value == 0 || d.value == -2;
      } else {
        ok = d.value == -1;
      }
      if (!rec.check(ok, "comb distance " + to_string(d) + " out of range at " + where)) return;
    }
  }
}

inline void prop_comb_kl(Rng& rng, Recorder& rec, std::uint64_t seed) {
  GeneratedComb gc = gen_random_comb(rng, comb_config(10, 1, 64));
  rec.attempts(gc.attempts);
  const OrderedBipartiteGraft& g = gc.comb;
  rec.begin_trial(seed, to_json(g));
  FactorComponentSet comps = factor_components(g.graft());
  KLPartition part;
  try {
    part = kl_partition(g.graft(), comps);
  } catch (const GraftError& e) {
    rec.check(false, e.what());
    return;
  }
  for (const FactorComponent& h : comps.components()) {
    VertexSet spine_part;
    for (const VertexId& v : h.vertices) {
      if (g.spine().contains(v)) spine_part.insert(v);
    }
    std::size_t spine_classes = 0;
    for (const VertexSet& cls : kl_classes_of_component(part, h.id)) {
      bool all_spine = std::all_of(cls.begin(), cls.end(), [&](const VertexId& v) { return g.spine().contains(v); });
      bool all_tooth = std::all_of(cls.begin(), cls.end(), [&](const VertexId& v) { return g.tooth().contains(v); });
      rec.check(all_spine || all_tooth, "KL class of " + h.id + " mixes sides");
      if (all_spine) {
        ++spine_classes;
        rec.check(cls == spine_part, "spine class of " + h.id + " is not V(H) ∩ A");
      }
    }
    rec.check(spine_classes == (spine_part.empty() ? 0U : 1U), "V(H) ∩ A of " + h.id + " is not a single class");
    VertexSet covered;
    std::size_t total = 0;
    for (const VertexSet& cls : kl_classes_of_component(part, h.id)) {
      covered.insert(cls.begin(), cls.end());
      total += cls.size();
    }
    rec.check(covered == h.vertices && total == h.vertices.size(), "KL classes of " + h.id + " do not partition V(H)");
  }
}

// Distance floors and the path characterisations in quasicombs, by
// exhaustive path and circuit enumeration.
inline void prop_quasicomb_paths(Rng& rng, Recorder& rec, std::uint64_t seed) {
  GeneratedCritical gq = gen_critical_quasicomb(rng, critical_config(8));
  rec.attempts(gq.attempts);
  const OrderedBipartiteGraft& g = gq.graft;
  const Multigraph& graph = g.graph();
  rec.begin_trial(seed, to_json(g));
  const IndexMask& f = gq.join.mask();
  auto balanced = [&](const oracle::IndexWalk& p) {
    for (std::size_t i = 1; i + 1 < p.vertices.size(); ++i) {
      if (!g.is_tooth(p.vertices[i])) continue;
      if ((f[p.edges[i - 1]] ? 1 : 0) + (f[p.edges[i]] ? 1 : 0) != 1) return false;
    }
    return true;
  };
  for (std::size_t x = 0; x < graph.vertex_count(); ++x) {
    for (std::size_t y = x + 1; y < graph.vertex_count(); ++y) {
      Distance d = f_distance(g.graft(), graph.vertex(x), graph.vertex(y));
      int floor = g.is_spine(x) && g.is_spine(y) ? 0 : (g.is_tooth(x) && g.is_tooth(y) ? -2 : -1);
      rec.check(d.value && *d.value >= floor, "distance below the quasicomb floor at " +
                                                  pair_text(graph.vertex(x), graph.vertex(y)));
      // Orient so that x is the spine end when the ends differ.
      std::size_t a = x, b = y;
      if (g.is_tooth(a) && g.is_spine(b)) std::swap(a, b);
      oracle::for_each_simple_path(graph, a, b, [&](const oracle::IndexWalk& p) {
        int w = oracle::walk_weight(p, f);
        bool bal = balanced(p);
        bool first_in = f[p.edges.front()], last_in = f[p.edges.back()];
        const std::string where = pair_text(graph.vertex(a), graph.vertex(b));
        if (g.is_spine(a) && g.is_spine(b)) {
          rec.check(bal == (w == 0), "A-A path: balanced iff weight 0 fails at " + where);
        } else if (g.is_spine(a)) {
          if (bal) rec.check(w == 1 || w == -1, "A-B balanced path weight not ±1 at " + where);
          rec.check((w == -1) == (bal && last_in), "A-B weight -1 characterisation fails at " + where);
          if (bal) rec.check((w == 1) == !last_in, "A-B weight 1 characterisation fails at " + where);
        } else {
          if (bal) rec.check(w == -2 || w == 0 || w == 2, "B-B balanced path weight out of range at " + where);
          rec.check((w == -2) == (bal && first_in && last_in), "B-B weight -2 characterisation fails at " + where);
          if (bal) {
            rec.check((w == 0) == (first_in != last_in), "B-B weight 0 characterisation fails at " + where);
            rec.check((w == 2) == (!first_in && !last_in), "B-B weight 2 characterisation fails at " + where);
          }
          if (w == 0) {
            WeightedWalkReport report;
            for (std::size_t v : p.vertices) report.vertices.push_back(graph.vertex(v));
            for (std::size_t e : p.edges) report.edges.push_back(graph.edge(e).id);
            try {
              VertexId z = midvertex(g, gq.join, report);
              if (bal) rec.check(z == report.vertices.front() || z == report.vertices.back(),
                                 "balanced path has an inner midvertex at " + where);
            } catch (const GraftError& e) {
              rec.check(false, std::string("midvertex: ") + e.what());
            }
          }
        }
        return true;
      });
    }
  }
  oracle::for_each_circuit(graph, [&](const oracle::IndexWalk& c) {
    bool bal = true;
    const std::size_t k = c.vertices.size();
    for (std::size_t i = 0; i < k; ++i) {
      if (!g.is_tooth(c.vertices[i])) continue;
      if ((f[c.edges[i]] ? 1 : 0) + (f[c.edges[(i + k - 1) % k]] ? 1 : 0) != 1) bal = false;
    }
    rec.check(bal == (oracle::walk_weight(c, f) == 0), "circuit: balanced iff weight 0 fails");
    return true;
  });
}

// Structure of critical quasicombs around the root.
inline void prop_critical_structure(Rng& rng, Recorder& rec, std::uint64_t seed) {
  GeneratedCritical gq = gen_critical_quasicomb(rng, critical_config(10));
  rec.attempts(gq.attempts);
  const OrderedBipartiteGraft& g = gq.graft;
  const Multigraph& graph = g.graph();
  rec.begin_trial(seed, to_json(g));
  JoinSet f = min_join(g.graft());
  const std::size_t r = graph.vertex_index(gq.root);
  for (const Incidence& inc : graph.incidences(r)) {
    rec.check(!f.mask()[inc.edge], "minimum join meets the root");
  }
  for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
    if (v == r) continue;
    if (g.is_tooth(v)) {
      int degree = 0;
      for (const Incidence& inc : graph.incidences(v)) degree += f.mask()[inc.edge] ? 1 : 0;
      rec.check(degree == 1, "tooth vertex '" + graph.vertex(v) + "' does not meet exactly one join edge");
    }
    WeightedWalkReport p = extract_shortest_path(g.graft(), f, graph.vertex(v), gq.root);
    bool bal = is_f_balanced(g, f.edges(), p, WalkShape::kPath);
    if (g.is_tooth(v)) {
      rec.check(bal && p.weight == 0 && f.contains(p.edges.front()),
                "shortest path from tooth vertex '" + graph.vertex(v) + "' to the root has the wrong shape");
    } else {
      rec.check(bal && p.weight == 1, "shortest path from spine vertex '" + graph.vertex(v) + "' to the root has the wrong shape");
    }
  }
}

// ---------------------------------------------------------------------------
// Ear decompositions.

inline void prop_ear_roundtrip(Rng& rng, Recorder& rec, std::uint64_t seed, bool balance) {
  GeneratedCritical gq = gen_critical_quasicomb(rng, critical_config(12));
  rec.attempts(gq.attempts);
  rec.begin_trial(seed, to_json(gq.graft));
  rec.check(is_critical_quasicomb(gq.graft, gq.root).critical, "generator emitted a non-critical graft");
  JoinSet f = min_join(gq.graft.graft());
  try {
    GraftEarDecomposition d = build_graft_ear_decomposition(gq.graft, gq.root, f);
    if (balance) {
      for (std::size_t i = 0; i < d.steps.size(); ++i) {
        const Graft& step = d.steps[i].graft.graft();
        EdgeSet restricted;
        for (const Edge& e : step.graph().edges()) {
          if (f.contains(e.id)) restricted.insert(e.id);
        }
        rec.check(is_join(step, restricted) && static_cast<int>(restricted.size()) == nu(step),
                  "step " + std::to_string(i + 1) + ": F restricted is not a minimum join");
      }
      return;
    }
    DecompositionReport report = verify_graft_ear_decomposition(d, f.edges());
    rec.check(report.ok, report.failures.empty() ? "" : report.failures.front());
    for (const EarStep& s : d.steps) rec.check(s.effective, "builder produced an ineffective step");
  } catch (const GraftError& e) {
    rec.check(false, std::string("builder failed: ") + e.what());
  }
}

inline void prop_ear_composition(Rng& rng, Recorder& rec, std::uint64_t seed) {
  EarComposition c = gen_ear_composition(rng, 1 + rng.index(6));
  rec.begin_trial(seed, to_json(c.result));
  rec.check(is_critical_quasicomb(c.result, c.root).critical, "composition of effective ears is not critical");
  GraftEarDecomposition d{c.root, {}, c.result};
  OrderedBipartiteGraft current = singleton_root(c.root);
  for (const OrderedBipartiteGraft& s : c.steps) {
    EarValidation v = validate_ear_step(current, s);
    d.steps.push_back({s, v.bonds, v.internal, v.necks, v.kind.value_or(EarKind::kRound), v.effective});
    current = graft_sum(current, s);
  }
  DecompositionReport report = verify_graft_ear_decomposition(d);
  rec.check(report.ok, report.failures.empty() ? "" : report.failures.front());
}

// ---------------------------------------------------------------------------
// Cathedral order.

struct CombCorpusItem {
  GeneratedComb comb;
  CombAnalysis analysis;
};

inline void prop_poset(Rng& rng, Recorder& rec, std::uint64_t seed, const std::string& which) {
  GeneratedComb gc = gen_random_comb(rng, comb_config(12, 2, 6));
  rec.attempts(gc.attempts);
  rec.begin_trial(seed, to_json(gc.comb));
  CombAnalysis analysis(gc.comb);
  const auto& comps = analysis.components().components();
  const std::size_t k = comps.size();
  CathedralPoset poset;
  try {
    poset = cathedral_poset(analysis);
  } catch (const GraftError& e) {
    rec.check(false, e.what());
    return;
  }
  std::vector<std::vector<std::uint64_t>> sets(k);
  for (std::size_t i = 0; i < k; ++i) sets[i] = detail::critical_set_masks(analysis, i, kDefaultMaxComponents);
  if (which == "poset-axioms") {
    for (std::size_t i = 0; i < k; ++i) {
      rec.check(poset.relation[i][i], "not reflexive");
      for (std::size_t j = 0; j < k; ++j) {
        if (i != j) rec.check(!(poset.relation[i][j] && poset.relation[j][i]), "not antisymmetric");
        for (std::size_t l = 0; l < k; ++l) {
          if (poset.relation[i][j] && poset.relation[j][l]) rec.check(poset.relation[i][l], "not transitive");
        }
      }
      for (std::uint64_t bits : sets[i]) {
        CriticalSetResult cert = is_critical_set(analysis, comps[i].id, union_of(analysis.components(), bits));
        rec.check(cert.certificate.contracted && cert.certificate.contracted->tooth().contains(cert.certificate.root),
                  "contracted vertex not on the tooth side");
        for (const auto& [v, d] : cert.certificate.distance_to_root) {
          bool spine = cert.certificate.contracted->spine().contains(v);
          rec.check(d.value == (spine ? 1 : 0), "certificate distance table is not (1 on spine, 0 on tooth)");
        }
        for (std::size_t j = 0; j < k; ++j) {
          if ((bits >> j) & 1U) rec.check(poset.relation[i][j], "component inside a critical set is not above");
        }
      }
    }
    return;
  }
  if (which == "union-transitivity") {
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        if (!poset.relation[a][b]) continue;
        for (std::size_t c = 0; c < k; ++c) {
          if (!poset.relation[b][c]) continue;
          for (std::uint64_t x : sets[a]) {
            if (!((x >> b) & 1U)) continue;
            for (std::uint64_t y : sets[b]) {
              if (!((y >> c) & 1U)) continue;
              UnionCheck u = union_criticality_check(analysis, comps[a].id, comps[b].id, comps[c].id,
                                                     union_of(analysis.components(), x),
                                                     union_of(analysis.components(), y));
              rec.check(u.ok, u.reason);
            }
          }
        }
      }
    }
    return;
  }
  KLPartition kl = kl_partition(gc.comb.graft(), analysis.components());
  for (const FactorComponent& h : comps) {
    UpperBoundReport r = upper_bound_check(analysis, poset, kl, h.id);
    rec.check(r.ok, r.violations.empty() ? "" : r.violations.front());
  }
}

// Balanced round ears relative to a factor-component of a comb have both
// bonds in B at distance 0.
inline void prop_round_ear_bonds(Rng& rng, Recorder& rec, std::uint64_t seed) {
  GeneratedComb gc = gen_random_comb(rng, comb_config(9, 2, 6));
  rec.attempts(gc.attempts);
  const OrderedBipartiteGraft& g = gc.comb;
  const Multigraph& graph = g.graph();
  rec.begin_trial(seed, to_json(g));
  CombAnalysis analysis(g);
  for (const FactorComponent& h : analysis.components().components()) {
    IndexMask in_h = graph.vertex_mask(h.vertices);
    for (std::size_t s = 0; s < graph.vertex_count(); ++s) {
      if (!in_h[s]) continue;
      // Walks leaving H at s, running outside H and returning to H.
      std::vector<std::size_t> vertices{s}, edges;
      std::vector<char> on(graph.vertex_count(), 0);
      on[s] = 1;
      std::function<void(std::size_t)> dfs = [&](std::size_t x) {
        for (const Incidence& inc : graph.incidences(x)) {
          if (!edges.empty() && inc.edge == edges.back()) continue;
          if (in_h[inc.other]) {
            if (edges.empty()) continue;  // edges inside H are not ears
            if (inc.other < s) continue;  // each ear once, from its least bond
            if (inc.other == s && inc.edge < edges.front()) continue;
            WeightedWalkReport ear;
            for (std::size_t v : vertices) ear.vertices.push_back(graph.vertex(v));
            if (inc.other != s) ear.vertices.push_back(graph.vertex(inc.other));
            for (std::size_t e : edges) ear.edges.push_back(graph.edge(e).id);
            ear.edges.push_back(graph.edge(inc.edge).id);
            if (!is_f_balanced(g, gc.join.edges(), ear, WalkShape::kEar, h.vertices)) continue;
            RoundEarBondCheck check = round_ear_bond_check(analysis, gc.join, h.id, ear);
            rec.check(check.ok, "balanced round ear relative to " + h.id + " has bonds " +
                                    pair_text(check.s, check.t) + " at distance " + to_string(check.distance));
            continue;
          }
          if (on[inc.other]) continue;
          on[inc.other] = 1;
          vertices.push_back(inc.other);
          edges.push_back(inc.edge);
          dfs(inc.other);
          vertices.pop_back();
          edges.pop_back();
          on[inc.other] = 0;
        }
      };
      dfs(s);
    }
  }
}

inline void prop_generator_validity(Rng& rng, Recorder& rec, std::uint64_t seed) {
  Graft g = gen_random_graft(rng, graft_config(12, false));
  rec.begin_trial(seed, to_json(g));
  rec.check(validate_graft(g.graph(), g.terminals()), "graft generator emitted a non-graft");
  GeneratedComb gc = gen_random_comb(rng, comb_config(10, 1, 64));
  rec.check(classify_comb(gc.comb).kind == CombKind::kComb, "comb generator emitted a non-comb");
  rec.check(is_minimum_join(gc.comb.graft(), gc.join.edges()), "comb generator join is not minimum");
  GeneratedCritical gq = gen_critical_quasicomb(rng, critical_config(10));
  rec.check(is_critical_quasicomb(gq.graft, gq.root).critical, "critical generator emitted a non-critical graft");
  rec.attempts(gc.attempts + gq.attempts);
}

using PropertyFn = std::function<void(Rng&, Recorder&, std::uint64_t)>;

struct PropertyEntry {
  std::string name;
  // Properties sharing a corpus draw identical instances trial by trial.
  std::string corpus;
  PropertyFn run;
};

inline const std::vector<PropertyEntry>& property_table() {
  static const std::vector<PropertyEntry> table = {
      {"oracle-equivalence", "oracle-equivalence", prop_oracle_equivalence},
      {"distance-formula", "distance-formula", prop_distance_formula},
      {"nonpositive-distance", "nonpositive-distance", prop_nonpositive_distance},
      {"circuits", "circuits", prop_circuits},
      {"graft-operations", "graft-operations", prop_graft_operations},
      {"kl-transitivity", "kl-transitivity", prop_kl_transitivity},
      {"comb-distances", "comb-distances", prop_comb_distances},
      {"comb-kl", "comb-kl", prop_comb_kl},
      {"quasicomb-paths", "quasicomb-paths", prop_quasicomb_paths},
      {"critical-structure", "critical-structure", prop_critical_structure},
      {"ear-roundtrip", "critical",
       [](Rng& r, Recorder& rec, std::uint64_t s) { prop_ear_roundtrip(r, rec, s, false); }},
      {"ear-balanced", "critical",
       [](Rng& r, Recorder& rec, std::uint64_t s) { prop_ear_roundtrip(r, rec, s, true); }},
      {"ear-composition", "ear-composition", prop_ear_composition},
      {"poset-axioms", "cathedral",
       [](Rng& r, Recorder& rec, std::uint64_t s) { prop_poset(r, rec, s, "poset-axioms"); }},
      {"union-transitivity", "cathedral",
       [](Rng& r, Recorder& rec, std::uint64_t s) { prop_poset(r, rec, s, "union-transitivity"); }},
      {"upper-bound", "cathedral",
       [](Rng& r, Recorder& rec, std::uint64_t s) { prop_poset(r, rec, s, "upper-bound"); }},
      {"round-ear-bonds", "round-ear-bonds", prop_round_ear_bonds},
      {"generator-validity", "generator-validity", prop_generator_validity},
  };
  return table;
}

inline const PropertyEntry& find_property(const std::string& name) {
  for (const PropertyEntry& entry : property_table()) {
    if (entry.name == name) return entry;
  }
  throw GraftError(ErrorKind::kInput, "unknown property '" + name + "'");
}

}  // namespace detail

inline std::vector<std::string> property_names() {
  std::vector<std::string> out;
  for (const detail::PropertyEntry& entry : detail::property_table()) out.push_back(entry.name);
  return out;
}

// Runs the selected properties (all of them when `selection` holds the
// single entry "all"). Throws kInput for an empty selection or unknown
// names.
inline SuiteReport run_property_suite(const SuiteOptions& options, const std::vector<std::string>& selection) {
  if (selection.empty()) throw GraftError(ErrorKind::kInput, "empty property selection");
  std::vector<std::string> names = selection;
  if (names.size() == 1 && names.front() == "all") names = property_names();
  std::vector<const detail::PropertyEntry*> chosen;
  for (const std::string& name : names) chosen.push_back(&detail::find_property(name));
  EngineConfig config = engine_config();
  config.flip_distance_sign = options.flip_distance_sign;
  ScopedEngineConfig scoped(config);
  const auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  report.properties.reserve(chosen.size());
  for (const auto* entry : chosen) {
    report.properties.push_back({entry->name});
    detail::Recorder rec(report.properties.back(), report, options.max_certificates);
    for (std::size_t t = 0; t < options.trials; ++t) {
      const std::uint64_t seed = detail::trial_seed(options.seed, entry->corpus, t);
      Rng rng(seed);
      try {
        entry->run(rng, rec, seed);
      } catch (const GraftError& e) {
        rec.check(false, std::string("unexpected ") + e.what());
      }
    }
  }
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

// Re-runs the single trial recorded in a certificate document.
inline SuiteReport replay_certificate(const Json& certificate) {
  const std::string property = certificate.at("property").get<std::string>();
  SuiteOptions options;
  options.trials = 1;
  options.flip_distance_sign = certificate.value("flip_distance_sign", false);
  const detail::PropertyEntry& entry = detail::find_property(property);
  EngineConfig config = engine_config();
  config.flip_distance_sign = options.flip_distance_sign;
  ScopedEngineConfig scoped(config);
  SuiteReport report;
  report.properties.push_back({property});
  detail::Recorder rec(report.properties.back(), report, options.max_certificates);
  const std::uint64_t seed = certificate.at("seed").get<std::uint64_t>();
  Rng rng(seed);
  try {
    entry.run(rng, rec, seed);
  } catch (const GraftError& e) {
    rec.check(false, std::string("unexpected ") + e.what());
  }
  return report;
}

inline SuiteReport run_property_suite(std::size_t trials, const GenConfig& cfg,
                                      const std::vector<std::string>& selection) {
  SuiteOptions options;
  options.trials = trials;
  options.seed = cfg.seed;
  return run_property_suite(options, selection);
}

}  // namespace grafts

#endif  // GRAFTS_PROPERTIES_HPP_
