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

// graftdecomp: command-line front end for the grafts library.
//
// Exit status: 0 on success, 1 when a check or verification fails, 2 on
// usage or input errors.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "grafts/grafts.hpp"

namespace {

using grafts::ErrorKind;
using grafts::GraftError;
using grafts::Json;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

enum class Format { kText, kJson, kDot };

struct Options {
  std::string input;
  std::uint64_t seed = 1;
  std::string format = "text";
  bool oracle = false;
  std::size_t max_brute = 22;
};

// Signals a failed check after the report has been printed.
struct CheckFailed {};

class Session {
 public:
  explicit Session(const Options& options) : options_(options) {
    if (options.format == "json") {
      format_ = Format::kJson;
    } else if (options.format == "dot") {
      format_ = Format::kDot;
    }
  }

  Format format() const { return format_; }
  const Options& options() const { return options_; }

  const Json& document() {
    if (!document_) {
      std::string text;
      if (options_.input.empty() || options_.input == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
      } else {
        std::ifstream in(options_.input);
        if (!in) throw GraftError(ErrorKind::kInput, "cannot read '" + options_.input + "'");
        text.assign(std::istreambuf_iterator<char>(in), {});
      }
      try {
        document_ = Json::parse(text);
      } catch (const nlohmann::json::parse_error&) {
        grafts::parse_graft_json(text);  // rethrows with a line and column
        throw;
      }
    }
    return *document_;
  }

  const grafts::ParsedGraft& parsed() {
    if (!parsed_) parsed_ = grafts::graft_from_json(document());
    return *parsed_;
  }

  const grafts::Graft& graft() { return parsed().graft; }

  const grafts::OrderedBipartiteGraft& bipartite() {
    if (!parsed().bipartite) throw GraftError(ErrorKind::kInput, "this command needs a 'bipartition' field");
    return *parsed().bipartite;
  }

  const grafts::CombAnalysis& analysis() {
    if (!analysis_) analysis_.emplace(bipartite());
    return *analysis_;
  }

  void require_format(std::initializer_list<Format> allowed) const {
    for (Format f : allowed) {
      if (f == format_) return;
    }
    throw GraftError(ErrorKind::kInput, "format '" + options_.format + "' is not available for this command");
  }

  void emit(const Json& doc, const std::string& text) const {
    if (format_ == Format::kJson) {
      std::cout << doc.dump(2) << "\n";
    } else {
      std::cout << text;
    }
  }

 private:
  Options options_;
  Format format_ = Format::kText;
  std::optional<Json> document_;
  std::optional<grafts::ParsedGraft> parsed_;
  std::optional<grafts::CombAnalysis> analysis_;
};

std::string braces(const grafts::VertexSet& ids) { return "{" + grafts::detail::join_ids(ids) + "}"; }

Json components_json(const grafts::FactorComponentSet& comps) {
  Json out = Json::array();
  for (const grafts::FactorComponent& h : comps.components()) {
    out.push_back({{"id", h.id}, {"vertices", grafts::to_json(h.vertices)}, {"allowed_edges", h.allowed_edges}});
  }
  return out;
}

std::string components_text(const grafts::FactorComponentSet& comps) {
  std::ostringstream out;
  for (const grafts::FactorComponent& h : comps.components()) {
    out << h.id << " " << braces(h.vertices) << " allowed " << braces(h.allowed_edges) << "\n";
  }
  return out.str();
}

Json kl_json(const grafts::KLPartition& part) {
  Json out = Json::array();
  for (const grafts::VertexSet& cls : part.classes) out.push_back(grafts::to_json(cls));
  return out;
}

std::string poset_text(const grafts::CathedralPoset& p) {
  std::ostringstream out;
  for (const auto& [a, b] : p.hasse) out << a << " -> " << b << "\n";
  for (const std::string& id : p.ids) out << "height " << id << " " << p.heights.at(id) << "\n";
  return out.str();
}

std::string suite_text(const grafts::SuiteReport& r) {
  std::ostringstream out;
  for (const grafts::PropertyStats& p : r.properties) {
    out << (p.failures == 0 ? "PASS " : "FAIL ") << p.name << ": " << p.trials << " trials, " << p.checks
        << " checks, " << p.failures << " failures";
    if (p.attempts) out << ", " << p.attempts << " generator samples";
    out << "\n";
  }
  for (const grafts::Counterexample& c : r.certificates) {
    out << "counterexample " << c.property << " seed " << c.seed << ": " << c.message << "\n";
  }
  out << "wall time " << r.wall_seconds << " s\n";
  return out.str();
}

void cmd_analyze(Session& s) {
  const Json& doc = s.document();
  if (doc.is_object() && doc.contains("property") && doc.contains("seed")) {
    // A counterexample certificate: replay its trial.
    grafts::SuiteReport r = grafts::replay_certificate(doc);
    s.emit(grafts::to_json(r), suite_text(r));
    if (!r.ok()) throw CheckFailed{};
    return;
  }
  s.require_format({Format::kText, Format::kJson});
  const grafts::Graft& g = s.graft();
  grafts::JoinSet f = grafts::min_join(g);
  grafts::FactorComponentSet comps = grafts::factor_components(g);
  grafts::KLPartition kl = grafts::kl_partition(g, comps);
  Json out = grafts::report_envelope("analysis");
  std::ostringstream text;
  out["nu"] = f.size();
  out["min_join"] = f.edges();
  out["components"] = components_json(comps);
  out["kl_classes"] = kl_json(kl);
  text << "nu " << f.size() << "\nmin-join " << braces(f.edges()) << "\ncomponents\n" << components_text(comps)
       << "kl\n";
  for (const grafts::VertexSet& cls : kl.classes) text << braces(cls) << "\n";
  if (s.parsed().bipartite) {
    grafts::CombClassification c = grafts::classify_comb(s.bipartite());
    out["classification"] = grafts::comb_kind_name(c.kind);
    text << "classification " << grafts::comb_kind_name(c.kind) << "\n";
    if (c.kind == grafts::CombKind::kComb && comps.size() <= grafts::kDefaultMaxComponents) {
      grafts::CathedralPoset p = grafts::cathedral_poset(s.analysis());
      out["poset"] = grafts::to_json(p);
      text << "poset\n" << poset_text(p);
    }
  }
  s.emit(out, text.str());
}

void cmd_min_join(Session& s) {
  const grafts::Graft& g = s.graft();
  grafts::JoinSet f = grafts::min_join(g);
  if (s.format() == Format::kDot) {
    std::cout << grafts::export_dot(g, &f.edges(), s.parsed().bipartite ? &*s.parsed().bipartite : nullptr);
    return;
  }
  Json out = grafts::report_envelope("min-join");
  out["nu"] = f.size();
  out["join"] = f.edges();
  s.emit(out, braces(f.edges()) + "\nnu " + std::to_string(f.size()) + "\n");
}

void cmd_dist(Session& s, const std::string& u, const std::string& v) {
  s.require_format({Format::kText, Format::kJson});
  grafts::Distance d = grafts::f_distance(s.graft(), u, v);
  Json out = grafts::report_envelope("distance");
  out["u"] = u;
  out["v"] = v;
  out["distance"] = d.value ? Json(*d.value) : Json();
  s.emit(out, grafts::to_string(d) + "\n");
}

void cmd_components(Session& s) {
  s.require_format({Format::kText, Format::kJson});
  grafts::FactorComponentSet comps = grafts::factor_components(s.graft());
  Json out = grafts::report_envelope("factor-components");
  out["components"] = components_json(comps);
  s.emit(out, components_text(comps));
}

void cmd_kl(Session& s) {
  s.require_format({Format::kText, Format::kJson});
  grafts::KLPartition kl = grafts::kl_partition(s.graft());
  Json out = grafts::report_envelope("kl-partition");
  out["classes"] = kl_json(kl);
  std::string text;
  for (const grafts::VertexSet& cls : kl.classes) text += braces(cls) + "\n";
  s.emit(out, text);
}

void cmd_classify(Session& s) {
  s.require_format({Format::kText, Format::kJson});
  grafts::CombClassification c = grafts::classify_comb(s.bipartite());
  Json out = grafts::report_envelope("classification");
  out["kind"] = grafts::comb_kind_name(c.kind);
  out["nu"] = c.nu;
  s.emit(out, std::string(grafts::comb_kind_name(c.kind)) + "\n");
}

void cmd_critical(Session& s, const std::string& root) {
  s.require_format({Format::kText, Format::kJson});
  grafts::CriticalCheck c = grafts::is_critical_quasicomb(s.bipartite(), root);
  Json out = grafts::report_envelope("critical");
  out["root"] = root;
  out["critical"] = c.critical;
  out["quasicomb"] = c.quasicomb;
  out["distance_to_root"] = Json::object();
  std::ostringstream text;
  text << (c.critical ? "critical" : "not critical") << "\n";
  for (const auto& [v, d] : c.distance_to_root) {
    out["distance_to_root"][v] = d.value ? Json(*d.value) : Json();
    text << "dist " << v << " " << grafts::to_string(d) << "\n";
  }
  s.emit(out, text.str());
  if (!c.critical) throw CheckFailed{};
}

void cmd_ear_decomp(Session& s, const std::string& root) {
  const grafts::OrderedBipartiteGraft& g = s.bipartite();
  grafts::JoinSet f = grafts::min_join(g.graft());
  grafts::GraftEarDecomposition d = grafts::build_graft_ear_decomposition(g, root, f);
  grafts::DecompositionReport report = grafts::verify_graft_ear_decomposition(d, f.edges());
  if (s.format() == Format::kDot) {
    std::cout << grafts::export_dot(d);
  } else {
    Json out = grafts::to_json(d);
    out["verified"] = report.ok;
    out["failures"] = report.failures;
    out["warnings"] = report.warnings;
    std::ostringstream text;
    for (std::size_t i = 0; i < d.steps.size(); ++i) {
      const grafts::EarStep& step = d.steps[i];
      grafts::EdgeSet edges;
      for (const grafts::Edge& e : step.graft.graph().edges()) edges.insert(e.id);
      text << i + 1 << " " << grafts::ear_kind_name(step.kind) << " " << braces(edges) << " T "
           << braces(step.graft.terminals()) << (step.effective ? " effective" : "") << "\n";
    }
    text << (report.ok ? "verified" : "verification failed") << "\n";
    for (const std::string& m : report.failures) text << "failure: " << m << "\n";
    for (const std::string& m : report.warnings) text << "warning: " << m << "\n";
    s.emit(out, text.str());
  }
  if (!report.ok) throw CheckFailed{};
}

void cmd_critical_sets(Session& s, const std::string& base) {
  s.require_format({Format::kText, Format::kJson});
  auto sets = grafts::enumerate_critical_sets(s.analysis(), base);
  Json out = grafts::report_envelope("critical-sets");
  out["component"] = base;
  out["sets"] = Json::array();
  std::ostringstream text;
  for (const auto& ids : sets) {
    out["sets"].push_back(ids);
    grafts::VertexSet vs = grafts::vertices_of(s.analysis(), ids);
    text << braces(grafts::VertexSet(ids.begin(), ids.end())) << " " << braces(vs) << "\n";
  }
  s.emit(out, text.str());
}

void cmd_poset(Session& s) {
  grafts::CathedralPoset p = grafts::cathedral_poset(s.analysis());
  if (s.format() == Format::kDot) {
    std::cout << grafts::export_dot(p, s.analysis().components());
    return;
  }
  s.emit(grafts::to_json(p), poset_text(p));
}

void cmd_upper(Session& s, const std::string& base) {
  s.require_format({Format::kText, Format::kJson});
  grafts::UpperBoundReport r = grafts::upper_bound_check(s.analysis(), base);
  std::ostringstream text;
  for (const grafts::UpperPair& p : r.pairs) {
    text << braces(p.component) << " -> " << (p.kl_class ? braces(*p.kl_class) : std::string("none")) << "\n";
  }
  for (const std::string& v : r.violations) text << "violation: " << v << "\n";
  text << (r.ok ? "ok" : "failed") << "\n";
  s.emit(grafts::to_json(r), text.str());
  if (!r.ok) throw CheckFailed{};
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void cmd_verify(Session& s, std::size_t trials, const std::string& properties, bool flip) {
  s.require_format({Format::kText, Format::kJson});
  grafts::SuiteOptions options;
  options.trials = trials;
  options.seed = s.options().seed;
  options.flip_distance_sign = flip;
  grafts::SuiteReport r = grafts::run_property_suite(options, split_list(properties));
  s.emit(grafts::to_json(r), suite_text(r));
  if (!r.ok()) throw CheckFailed{};
}

struct GenFlags {
  std::string mode = "graft";
  grafts::GenConfig cfg;
};

void cmd_gen(Session& s, GenFlags flags) {
  grafts::GenConfig& cfg = flags.cfg;
  cfg.seed = s.options().seed;
  cfg.validate();
  grafts::Rng rng(cfg.seed);
  Json out;
  std::string dot;
  if (flags.mode == "graft") {
    grafts::Graft g = grafts::gen_random_graft(rng, cfg);
    out = grafts::to_json(g);
    dot = grafts::export_dot(g);
  } else if (flags.mode == "comb") {
    grafts::GeneratedComb c = grafts::gen_random_comb(rng, cfg);
    out = grafts::to_json(c.comb);
    dot = grafts::export_dot(c.comb, &c.join.edges());
  } else {
    cfg.connected = true;
    grafts::GeneratedCritical c = grafts::gen_critical_quasicomb(rng, cfg);
    out = grafts::to_json(c.graft);
    out["root"] = c.root;
    dot = grafts::export_dot(c.graft, &c.join.edges());
  }
  if (s.format() == Format::kDot) {
    std::cout << dot;
  } else {
    std::cout << out.dump(2) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Analyse grafts: minimum joins, factor-components, combs, ear decompositions and the cathedral order."};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  Options options;
  app.add_option("--input,-i", options.input, "graft JSON file (default: standard input)");
  app.add_option("--seed", options.seed, "random seed");
  app.add_option("--format", options.format, "output format")->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_flag("--oracle", options.oracle, "use the exhaustive join search instead of matching");
  app.add_option("--max-brute", options.max_brute, "edge limit for the exhaustive join search");

  std::string u, v, root, component, properties = "all";
  std::size_t trials = 100;
  bool flip = false;
  GenFlags gen;

  auto* analyze = app.add_subcommand("analyze", "full report, or replay a counterexample certificate");
  auto* min_join = app.add_subcommand("min-join", "a minimum join");
  auto* dist = app.add_subcommand("dist", "distance between two vertices");
  dist->add_option("u", u)->required();
  dist->add_option("v", v)->required();
  auto* components = app.add_subcommand("components", "factor-components");
  auto* kl = app.add_subcommand("kl", "KL partition");
  auto* classify = app.add_subcommand("classify", "comb, quasicomb or neither");
  auto* critical = app.add_subcommand("critical", "is the quasicomb critical with this root");
  critical->add_option("r", root)->required();
  auto* ear = app.add_subcommand("ear-decomp", "graft ear decomposition from a root");
  ear->add_option("r", root)->required();
  auto* sets = app.add_subcommand("critical-sets", "critical sets of a factor-component");
  sets->add_option("C", component)->required();
  auto* poset = app.add_subcommand("poset", "cathedral order of a comb");
  auto* upper = app.add_subcommand("upper", "upper-bound check for a factor-component");
  upper->add_option("C", component)->required();
  auto* verify = app.add_subcommand("verify", "run the randomised property suite");
  verify->add_option("--trials", trials, "trials per property")->check(CLI::PositiveNumber);
  verify->add_option("--properties", properties, "comma-separated property names, or 'all'");
  verify->add_flag("--flip-distance-sign", flip, "report distances with the wrong sign (mutation test)");
  auto* list = verify->add_flag("--list", "print the property names and exit");
  auto* gen_cmd = app.add_subcommand("gen", "generate a random instance");
  gen_cmd->add_option("--mode", gen.mode)->check(CLI::IsMember({"graft", "comb", "critical-quasicomb"}));
  gen_cmd->add_option("--min-vertices", gen.cfg.min_vertices);
  gen_cmd->add_option("--max-vertices", gen.cfg.max_vertices);
  gen_cmd->add_option("--edge-density", gen.cfg.edge_density)->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--terminal-density", gen.cfg.terminal_density)->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--retry-budget", gen.cfg.retry_budget);
  gen_cmd->add_flag("--connected", gen.cfg.connected);
  gen_cmd->add_option("--min-components", gen.cfg.min_components);
  gen_cmd->add_option("--max-components", gen.cfg.max_components);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  grafts::EngineConfig engine = grafts::engine_config();
  engine.backend = options.oracle ? grafts::JoinBackend::kBruteForce : grafts::JoinBackend::kMatching;
  engine.max_brute_edges = options.max_brute;
  grafts::ScopedEngineConfig scoped(engine);
  Session session(options);
  try {
    if (*analyze) cmd_analyze(session);
    if (*min_join) cmd_min_join(session);
    if (*dist) cmd_dist(session, u, v);
    if (*components) cmd_components(session);
    if (*kl) cmd_kl(session);
    if (*classify) cmd_classify(session);
    if (*critical) cmd_critical(session, root);
    if (*ear) cmd_ear_decomp(session, root);
    if (*sets) cmd_critical_sets(session, component);
    if (*poset) cmd_poset(session);
    if (*upper) cmd_upper(session, component);
    if (*verify) {
      if (*list) {
        for (const std::string& name : grafts::property_names()) std::cout << name << "\n";
      } else {
        cmd_verify(session, trials, properties, flip);
      }
    }
    if (*gen_cmd) {
      if (gen.mode == "comb") gen.cfg.mode = grafts::GenMode::kComb;
      if (gen.mode == "critical-quasicomb") gen.cfg.mode = grafts::GenMode::kCriticalQuasicomb;
      cmd_gen(session, gen);
    }
  } catch (const CheckFailed&) {
    return kExitFailure;
  } catch (const GraftError& e) {
    std::cerr << "graftdecomp: " << e.what() << "\n";
    return e.kind() == ErrorKind::kIntegrity ? kExitFailure : kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "graftdecomp: input error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
