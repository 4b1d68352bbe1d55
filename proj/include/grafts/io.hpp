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

// Graft JSON documents and Graphviz DOT rendering.
//
// A graft document looks like
//
//   {"vertices": ["a", "b"],
//    "edges": [{"id": "e", "u": "a", "v": "b"}],
//    "terminals": ["a", "b"],
//    "bipartition": {"A": ["a"], "B": ["b"]}}
//
// where "bipartition" is optional and ids may be strings or integers.

#ifndef GRAFTS_IO_HPP_
#define GRAFTS_IO_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "grafts/cathedral.hpp"
#include "grafts/comb.hpp"
#include "grafts/decomposition.hpp"
#include "grafts/graft.hpp"
#include "grafts/join.hpp"

namespace grafts {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchemaVersion = 1;

struct ParsedGraft {
  Graft graft;
  std::optional<OrderedBipartiteGraft> bipartite;
};

namespace detail {

inline std::string id_from_json(const Json& value, const std::string& field) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_integer()) return std::to_string(value.get<long long>());
  throw GraftError(ErrorKind::kInput, "field '" + field + "': expected a string or integer id");
}

inline std::vector<std::string> ids_from_json(const Json& doc, const std::string& field) {
  if (!doc.is_array()) throw GraftError(ErrorKind::kInput, "field '" + field + "': expected an array");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    out.push_back(id_from_json(doc[i], field + "[" + std::to_string(i) + "]"));
  }
  return out;
}

inline const Json& require_field(const Json& doc, const char* name, const std::string& where) {
  auto it = doc.find(name);
  if (it == doc.end()) {
    throw GraftError(ErrorKind::kInput, "field '" + where + (where.empty() ? "" : ".") + name + "' is missing");
  }
  return *it;
}

inline void reject_duplicates(const std::vector<std::string>& ids, const std::string& field) {
  VertexSet seen;
  for (const std::string& id : ids) {
    if (!seen.insert(id).second) throw GraftError(ErrorKind::kInput, "field '" + field + "': duplicate id '" + id + "'");
  }
}

inline void require_known(const Multigraph& graph, const std::vector<std::string>& ids, const std::string& field) {
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (!graph.has_vertex(ids[i])) {
      throw GraftError(ErrorKind::kInput, "field '" + field + "[" + std::to_string(i) + "]': unknown vertex '" +
                                              ids[i] + "'");
    }
  }
}

}  // namespace detail

inline ParsedGraft graft_from_json(const Json& doc) {
  if (!doc.is_object()) throw GraftError(ErrorKind::kInput, "document root: expected an object");
  std::vector<VertexId> vertices = detail::ids_from_json(detail::require_field(doc, "vertices", ""), "vertices");
  detail::reject_duplicates(vertices, "vertices");
  const Json& edge_doc = detail::require_field(doc, "edges", "");
  if (!edge_doc.is_array()) throw GraftError(ErrorKind::kInput, "field 'edges': expected an array");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < edge_doc.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    const Json& e = edge_doc[i];
    if (!e.is_object()) throw GraftError(ErrorKind::kInput, "field '" + where + "': expected an object");
    edges.push_back({detail::id_from_json(detail::require_field(e, "id", where), where + ".id"),
                     detail::id_from_json(detail::require_field(e, "u", where), where + ".u"),
                     detail::id_from_json(detail::require_field(e, "v", where), where + ".v")});
  }
  std::vector<std::string> edge_ids;
  for (const Edge& e : edges) edge_ids.push_back(e.id);
  detail::reject_duplicates(edge_ids, "edges[].id");
  VertexSet known(vertices.begin(), vertices.end());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (const VertexId* end : {&edges[i].u, &edges[i].v}) {
      if (!known.contains(*end)) {
        throw GraftError(ErrorKind::kInput, "field 'edges[" + std::to_string(i) + "]': unknown vertex '" + *end + "'");
      }
    }
  }
  Multigraph graph(std::move(vertices), std::move(edges));
  std::vector<std::string> terminals;
  if (auto it = doc.find("terminals"); it != doc.end()) terminals = detail::ids_from_json(*it, "terminals");
  detail::require_known(graph, terminals, "terminals");
  VertexSet terminal_set(terminals.begin(), terminals.end());
  auto bip = doc.find("bipartition");
  if (bip == doc.end() || bip->is_null()) return {Graft(std::move(graph), std::move(terminal_set)), std::nullopt};
  if (!bip->is_object()) throw GraftError(ErrorKind::kInput, "field 'bipartition': expected an object");
  std::vector<std::string> a = detail::ids_from_json(detail::require_field(*bip, "A", "bipartition"), "bipartition.A");
  std::vector<std::string> b = detail::ids_from_json(detail::require_field(*bip, "B", "bipartition"), "bipartition.B");
  detail::require_known(graph, a, "bipartition.A");
  detail::require_known(graph, b, "bipartition.B");
  OrderedBipartiteGraft g = build_bipartite_graft(graph, terminal_set, VertexSet(a.begin(), a.end()),
                                                  VertexSet(b.begin(), b.end()));
  return {g.graft(), g};
}

// Parses a graft document. Syntax errors report line and column; schema
// errors name the offending field.
inline ParsedGraft parse_graft_json(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw GraftError(ErrorKind::kInput, "line " + std::to_string(line) + ", column " + std::to_string(column) +
                                            ": malformed JSON");
  }
  return graft_from_json(doc);
}

inline Json to_json(const VertexSet& ids) {
  Json out = Json::array();
  for (const auto& id : ids) out.push_back(id);
  return out;
}

inline Json to_json(const Graft& g) {
  Json doc;
  doc["vertices"] = Json::array();
  for (const VertexId& v : g.graph().vertices()) doc["vertices"].push_back(v);
  doc["edges"] = Json::array();
  for (const Edge& e : g.graph().edges()) doc["edges"].push_back({{"id", e.id}, {"u", e.u}, {"v", e.v}});
  doc["terminals"] = to_json(g.terminals());
  return doc;
}

inline Json to_json(const OrderedBipartiteGraft& g) {
  Json doc = to_json(g.graft());
  doc["bipartition"] = {{"A", to_json(g.spine())}, {"B", to_json(g.tooth())}};
  return doc;
}

inline std::string serialize_graft(const Graft& g) { return to_json(g).dump(2); }
inline std::string serialize_graft(const OrderedBipartiteGraft& g) { return to_json(g).dump(2); }

// A report object carrying the schema version and its kind.
inline Json report_envelope(const std::string& kind) {
  Json doc;
  doc["schema_version"] = kReportSchemaVersion;
  doc["report"] = kind;
  return doc;
}

inline Json to_json(const GraftEarDecomposition& d) {
  Json doc = report_envelope("ear-decomposition");
  doc["root"] = d.root;
  doc["steps"] = Json::array();
  for (const EarStep& s : d.steps) {
    Json step;
    step["edges"] = Json::array();
    for (const Edge& e : s.graft.graph().edges()) step["edges"].push_back(e.id);
    step["bonds"] = s.bonds;
    step["terminals"] = to_json(s.graft.terminals());
    step["kind"] = ear_kind_name(s.kind);
    step["spine"] = to_json(s.graft.spine());
    step["tooth"] = to_json(s.graft.tooth());
    step["effective"] = s.effective;
    doc["steps"].push_back(std::move(step));
  }
  return doc;
}

inline Json to_json(const UpperBoundReport& r) {
  Json doc = report_envelope("upper-bound");
  doc["component"] = r.base;
  doc["ok"] = r.ok;
  doc["upper"] = to_json(r.upper);
  doc["pairs"] = Json::array();
  for (const UpperPair& p : r.pairs) {
    Json pair{{"K", to_json(p.component)}, {"neighbours", to_json(p.neighbours)}};
    pair["class"] = p.kl_class ? to_json(*p.kl_class) : Json();
    doc["pairs"].push_back(std::move(pair));
  }
  doc["violations"] = r.violations;
  return doc;
}

inline Json to_json(const CathedralPoset& p) {
  Json doc = report_envelope("cathedral-poset");
  doc["components"] = p.ids;
  doc["relation"] = Json::array();
  for (std::size_t i = 0; i < p.ids.size(); ++i) {
    for (std::size_t j = 0; j < p.ids.size(); ++j) {
      if (p.relation[i][j]) doc["relation"].push_back({p.ids[i], p.ids[j]});
    }
  }
  doc["hasse"] = Json::array();
  for (const auto& [a, b] : p.hasse) doc["hasse"].push_back({a, b});
  doc["heights"] = Json::object();
  for (const std::string& id : p.ids) doc["heights"][id] = p.heights.at(id);
  return doc;
}

namespace detail {

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out + "\"";
}

inline std::string join_ids(const VertexSet& ids) {
  std::string out;
  for (const auto& id : ids) out += (out.empty() ? "" : ",") + id;
  return out;
}

inline void dot_vertices(std::ostringstream& out, const Graft& g, const OrderedBipartiteGraft* bip) {
  for (std::size_t v = 0; v < g.graph().vertex_count(); ++v) {
    const VertexId& id = g.graph().vertex(v);
    out << "  " << dot_quote(id) << " [shape=" << (bip && bip->is_spine(v) ? "box" : "ellipse");
    if (g.is_terminal(id)) out << ", peripheries=2";
    out << "];\n";
  }
}

}  // namespace detail

// Undirected rendering: terminals doubly outlined, spine vertices boxed,
// edges of `join` bold.
inline std::string export_dot(const Graft& g, const EdgeSet* join = nullptr,
                              const OrderedBipartiteGraft* bip = nullptr) {
  std::ostringstream out;
  out << "graph graft {\n";
  detail::dot_vertices(out, g, bip);
  for (const Edge& e : g.graph().edges()) {
    out << "  " << detail::dot_quote(e.u) << " -- " << detail::dot_quote(e.v) << " [label=" << detail::dot_quote(e.id);
    if (join && join->contains(e.id)) out << ", style=bold, color=red";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

inline std::string export_dot(const OrderedBipartiteGraft& g, const EdgeSet* join = nullptr) {
  return export_dot(g.graft(), join, &g);
}

// Edges labelled "id [k]" with k the 1-based step that adds them.
inline std::string export_dot(const GraftEarDecomposition& d) {
  std::map<EdgeId, std::size_t> step_of;
  for (std::size_t i = 0; i < d.steps.size(); ++i) {
    for (const Edge& e : d.steps[i].graft.graph().edges()) step_of.emplace(e.id, i + 1);
  }
  std::ostringstream out;
  out << "graph decomposition {\n";
  detail::dot_vertices(out, d.target.graft(), &d.target);
  for (const Edge& e : d.target.graph().edges()) {
    auto it = step_of.find(e.id);
    std::string label = e.id + " [" + (it == step_of.end() ? std::string("?") : std::to_string(it->second)) + "]";
    out << "  " << detail::dot_quote(e.u) << " -- " << detail::dot_quote(e.v) << " [label=" << detail::dot_quote(label)
        << "];\n";
  }
  out << "}\n";
  return out.str();
}

// Hasse diagram, each component labelled by its id and vertex list.
inline std::string export_dot(const CathedralPoset& p, const FactorComponentSet& components) {
  std::ostringstream out;
  out << "digraph cathedral {\n";
  for (const ComponentId& id : p.ids) {
    out << "  " << detail::dot_quote(id) << " [label="
        << detail::dot_quote(id + "\n{" + detail::join_ids(components.at(id).vertices) + "}") << "];\n";
  }
  for (const auto& [a, b] : p.hasse) out << "  " << detail::dot_quote(a) << " -> " << detail::dot_quote(b) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace grafts

#endif  // GRAFTS_IO_HPP_
