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

// Reference instances shared by the tests.

#ifndef GRAFTS_TESTS_FIXTURES_HPP_
#define GRAFTS_TESTS_FIXTURES_HPP_

#include <fstream>
#include <iterator>
#include <string>
#include <vector>

#include "grafts/grafts.hpp"

namespace grafts::testing {

inline OrderedBipartiteGraft make(std::vector<VertexId> vertices, std::vector<Edge> edges, VertexSet terminals,
                                  VertexSet spine, VertexSet tooth) {
  return build_bipartite_graft(Multigraph(std::move(vertices), std::move(edges)), std::move(terminals),
                               std::move(spine), std::move(tooth));
}

// K2.
inline OrderedBipartiteGraft i1() { return make({"a", "b"}, {{"e", "a", "b"}}, {"a", "b"}, {"a"}, {"b"}); }

// Four-cycle v1 v2 v3 v4.
inline OrderedBipartiteGraft i2() {
  return make({"v1", "v2", "v3", "v4"},
              {{"f1", "v1", "v2"}, {"f2", "v2", "v3"}, {"f3", "v3", "v4"}, {"f4", "v4", "v1"}}, {"v2", "v4"},
              {"v1", "v3"}, {"v2", "v4"});
}

// Path a0 b0 a1 b1, every vertex a terminal.
inline OrderedBipartiteGraft i3() {
  return make({"a0", "b0", "a1", "b1"}, {{"e0", "a0", "b0"}, {"c", "b0", "a1"}, {"e1", "a1", "b1"}},
              {"a0", "b0", "a1", "b1"}, {"a0", "a1"}, {"b0", "b1"});
}

// Path r a1 b1 rooted at r.
inline OrderedBipartiteGraft i4() {
  return make({"r", "a1", "b1"}, {{"c", "r", "a1"}, {"e1", "a1", "b1"}}, {"a1", "b1"}, {"a1"}, {"r", "b1"});
}

inline std::string data_path(const std::string& name) { return std::string(GRAFTS_TEST_DATA) + "/" + name; }

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace grafts::testing

#define EXPECT_GRAFT_ERROR(statement, expected_kind)                       \
  do {                                                                     \
    try {                                                                  \
      statement;                                                           \
      ADD_FAILURE() << "no GraftError from " #statement;                   \
    } catch (const ::grafts::GraftError& error_) {                         \
      EXPECT_EQ(error_.kind(), expected_kind) << error_.what();            \
    }                                                                      \
  } while (false)

#endif  // GRAFTS_TESTS_FIXTURES_HPP_
