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

// Structural predicates, path search and the graph moves (T) and (S).

#ifndef GGT_GRAPHCORE_HPP_
#define GGT_GRAPHCORE_HPP_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ggt/graph.hpp"
#include "ggt/path.hpp"

namespace ggt {

struct CriteriaReport {
  bool no_sinks = false;
  bool no_sources = false;
  bool condition_L = false;
  bool cofinal = false;
  bool reaches_all_infinite_emitters = false;
  bool strongly_connected = false;
  bool ah_criteria = false;
  bool lemma81_hypotheses = false;
  // Flag name -> counterexample, present only for failed flags.
  std::map<std::string, std::string> witnesses;
  // The least infinite emitter carrying a loop family and reaching every
  // vertex in one step, when lemma81_hypotheses holds.
  std::optional<VertexId> lemma81_emitter;
  std::optional<uint32_t> lemma81_loop_family;

  std::string to_string() const;
};

CriteriaReport validate(const Graph& g);

// reach[v][w]: w is reachable from v by a path of length >= 0.
std::vector<std::vector<bool>> reachability(const Graph& g);

// Vertices of the nontrivial strongly connected component containing v, or
// empty when v lies on no cycle.
std::vector<VertexId> cyclic_component(const Graph& g, VertexId v);

GraphPtr move_t(const Graph& g, VertexId w);
GraphPtr move_s(const Graph& g, VertexId v);

// Least path in shortlex edge order from `from` to `to`, of exactly `length`
// edges when given, else of minimal length. Edges in `avoid` are never used.
std::optional<Path> find_path(const Graph& g, VertexId from, VertexId to,
                              std::optional<size_t> length = std::nullopt,
                              const std::set<Edge>& avoid = {});

// Least path of exactly `length` edges ending at `to`, over all start vertices.
std::optional<Path> find_path_into(const Graph& g, VertexId to, size_t length);

// Least shortest cycle at v whose first edge is not in `avoid_first`.
std::optional<Path> least_cycle(const Graph& g, VertexId v,
                                const std::set<Edge>& avoid_first = {});

// Two cycles at v, neither a prefix of the other, with first edges outside
// `avoid_first`. Throws NoDisjointCycles.
std::pair<Path, Path> two_disjoint_cycles(const Graph& g, VertexId v,
                                          const std::set<Edge>& avoid_first = {});

}  // namespace ggt

#endif  // GGT_GRAPHCORE_HPP_
