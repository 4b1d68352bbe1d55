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


// Acceptance runner. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "fixtures.hpp"
#include "grafts/grafts.hpp"

namespace {

using grafts::SuiteOptions;
using grafts::SuiteReport;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

// Runs the named properties and requires each to reach `min_trials`
// with no failed checks.
Outcome suite(const std::vector<std::string>& names, std::size_t min_trials, bool flip = false) {
  SuiteOptions options;
  options.trials = min_trials;
  options.seed = 20260101;
  options.flip_distance_sign = flip;
  SuiteReport report = grafts::run_property_suite(options, names);
  Outcome out{true, ""};
  for (const grafts::PropertyStats& p : report.properties) {
    if (p.trials < min_trials || p.failures != 0) out.pass = false;
    if (!out.detail.empty()) out.detail += "; ";
    out.detail += p.name + " trials=" + std::to_string(p.trials) + " checks=" + std::to_string(p.checks) +
                  " failures=" + std::to_string(p.failures);
    if (p.attempts != 0) out.detail += " samples=" + std::to_string(p.attempts);
  }
  if (!report.certificates.empty()) out.detail += "; first: " + report.certificates.front().message;
  char buf[32];
  std::snprintf(buf, sizeof buf, " (%.2fs)", report.wall_seconds);
  out.detail += buf;
  return out;
}

// Collects failed expectations for the golden fixture criterion.
class Golden {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) missed_.push_back(what);
  }
  Outcome outcome(double elapsed) const {
    Outcome out{missed_.empty() && elapsed <= 1.0, std::to_string(checks_) + " checks"};
    for (const std::string& m : missed_) out.detail += "; missed " + m;
    char buf[48];
    std::snprintf(buf, sizeof buf, " (%.3fs, limit 1s)", elapsed);
    out.detail += buf;
    return out;
  }

 private:
  std::size_t checks_ = 0;
  std::vector<std::string> missed_;
};

Outcome golden() {
  using namespace grafts;
  namespace t = grafts::testing;
  const Clock::time_point start = Clock::now();
  Golden g;
  const OrderedBipartiteGraft i1 = t::i1(), i2 = t::i2(), i3 = t::i3(), i4 = t::i4();

  g.expect(min_join(i1.graft()).edges() == EdgeSet{"e"}, "I1 join");
  g.expect(min_join_bruteforce(i2.graft()).edges() == EdgeSet{"f2", "f3"}, "I2 brute-force join");
  g.expect(nu(i2.graft()) == 2, "I2 nu");
  g.expect(min_join(i3.graft()).edges() == EdgeSet{"e0", "e1"}, "I3 join");
  g.expect(f_distance(i1.graft(), "a", "b").value == -1, "I1 dist(a,b)");
  g.expect(f_distance(i2.graft(), "v2", "v4").value == -2, "I2 dist(v2,v4)");
  g.expect(f_distance(i2.graft(), "v1", "v3").value == 0, "I2 dist(v1,v3)");

  WeightedWalkReport p2 = extract_shortest_path(i2.graft(), JoinSet(i2.graft(), {"f1", "f4"}), "v2", "v4");
  g.expect(p2.weight == -2 && p2.vertices == std::vector<VertexId>{"v2", "v1", "v4"}, "I2 path v2-v1-v4");
  JoinSet f4(i4.graft(), {"e1"});
  WeightedWalkReport p4 = extract_shortest_path(i4.graft(), f4, "b1", "r");
  g.expect(p4.weight == 0 && p4.vertices == std::vector<VertexId>{"b1", "a1", "r"}, "I4 path b1-a1-r");
  g.expect(midvertex(i4, f4, p4) == "r", "I4 midvertex");

  g.expect(allowed_edge_set(i2.graft()) == EdgeSet{"f1", "f2", "f3", "f4"}, "I2 allowed edges");
  g.expect(allowed_edge_set(i3.graft()) == EdgeSet{"e0", "e1"}, "I3 allowed edges");
  g.expect(kl_partition(i2.graft()).classes == std::vector<VertexSet>{{"v1", "v3"}, {"v2"}, {"v4"}},
           "I2 KL classes");
  g.expect(kl_partition(i1.graft()).classes == std::vector<VertexSet>{{"a"}, {"b"}}, "I1 KL classes");

  g.expect(classify_comb(i1).kind == CombKind::kComb, "I1 comb");
  g.expect(classify_comb(i4).kind == CombKind::kQuasicomb, "I4 quasicomb");
  g.expect(is_critical_quasicomb(i4, "r").critical, "I4 critical at r");
  GraftEarDecomposition d = build_graft_ear_decomposition(i4, "r", f4);
  g.expect(verify_graft_ear_decomposition(d, f4.edges()).ok, "I4 ear decomposition");

  CombAnalysis a3(i3);
  g.expect(precedes(a3, "a0", "a1"), "I3 G1 precedes G2");
  g.expect(!precedes(a3, "a1", "a0"), "I3 G2 does not precede G1");
  CathedralPoset poset = cathedral_poset(a3);
  g.expect(poset.hasse == std::vector<std::pair<ComponentId, ComponentId>>{{"a0", "a1"}}, "I3 Hasse a0->a1");
  UpperBoundReport upper = upper_bound_check(a3, "a0");
  g.expect(upper.ok && upper.pairs.size() == 1 && upper.pairs[0].component == VertexSet{"a1", "b1"} &&
               upper.pairs[0].kl_class == VertexSet{"b0"},
           "I3 upper pair {a1,b1} -> {b0}");
  return g.outcome(seconds_since(start));
}

// The sign flip must break both distance criteria.
Outcome mutation() {
  Outcome dist = suite({"distance-formula"}, 50, true);
  Outcome comb = suite({"comb-distances"}, 50, true);
  Outcome out{!dist.pass && !comb.pass, "flipped: " + dist.detail + " | " + comb.detail};
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"oracle equivalence", [] { return suite({"oracle-equivalence"}, 1000); }},
      {"distance formula", [] { return suite({"distance-formula"}, 500); }},
      {"comb distances", [] { return suite({"comb-distances"}, 300); }},
      {"KL partition", [] { return suite({"comb-kl", "kl-transitivity"}, 300); }},
      {"ear decomposition round trip", [] { return suite({"ear-roundtrip", "ear-composition"}, 200); }},
      {"balanced builder output", [] { return suite({"ear-balanced"}, 200); }},
      {"cathedral order axioms", [] { return suite({"poset-axioms"}, 200); }},
      {"union of critical sets", [] { return suite({"union-transitivity"}, 200); }},
      {"upper bound", [] { return suite({"upper-bound"}, 200); }},
      {"golden fixtures", golden},
      {"mutation sensitivity", mutation},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome out;
    try {
      out = criteria[i].second();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    if (!out.pass) ++failed;
    std::printf("%s criterion %zu: %s -- %s\n", out.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                out.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
