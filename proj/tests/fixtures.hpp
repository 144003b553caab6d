// Copyright 2026 The ggt Authors
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

// Standard graphs shared by the unit tests and the acceptance binary.

#ifndef GGT_TESTS_FIXTURES_HPP_
#define GGT_TESTS_FIXTURES_HPP_

#include <string>
#include <vector>

#include "ggt/graph.hpp"

namespace ggt::fixtures {

// One vertex v with a single loop family L.
inline GraphPtr e_inf() {
  return Graph::create("einf", {"v"}, {}, {{"L", "v", "v"}});
}

// One vertex v with n loops named a, b, c, ...
inline GraphPtr e_n(int n) {
  std::vector<EdgeDecl> edges;
  for (int i = 0; i < n; ++i) edges.push_back({std::string(1, char('a' + i)), "v", "v"});
  return Graph::create("e" + std::to_string(n), {"v"}, edges, {});
}

// The cycle on n vertices. C_2 uses vertices u, w and edges x: u->w, y: w->u;
// other sizes use vertices c1..cn and edges x1..xn with xi: ci -> c(i+1).
inline GraphPtr c_n(int n) {
  if (n == 2) {
    return Graph::create("c2", {"u", "w"}, {{"x", "u", "w"}, {"y", "w", "u"}}, {});
  }
  std::vector<std::string> vs;
  std::vector<EdgeDecl> edges;
  for (int i = 1; i <= n; ++i) {
    vs.push_back("c" + std::to_string(i));
    edges.push_back({"x" + std::to_string(i), "c" + std::to_string(i),
                     "c" + std::to_string(i % n + 1)});
  }
  return Graph::create("c" + std::to_string(n), vs, edges, {});
}

// Four vertices: a source a feeding b; b has a loop and three edges to each
// of c and d; c is an infinite emitter back to b; d has four loops and three
// edges to c.
inline GraphPtr fig3() {
  std::vector<EdgeDecl> edges{{"ab", "a", "b"}, {"bb", "b", "b"}};
  for (int i = 1; i <= 3; ++i) {
    edges.push_back({"bd" + std::to_string(i), "b", "d"});
    edges.push_back({"bc" + std::to_string(i), "b", "c"});
    edges.push_back({"dc" + std::to_string(i), "d", "c"});
  }
  for (int i = 1; i <= 4; ++i) edges.push_back({"dd" + std::to_string(i), "d", "d"});
  return Graph::create("fig3", {"a", "b", "c", "d"}, edges, {{"cb", "c", "b"}});
}

}  // namespace ggt::fixtures

#endif  // GGT_TESTS_FIXTURES_HPP_
