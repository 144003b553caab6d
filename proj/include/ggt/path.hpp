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

#ifndef GGT_PATH_HPP_
#define GGT_PATH_HPP_

#include <compare>
#include <vector>

#include "ggt/graph.hpp"

namespace ggt {

// A finite path. `base` is the source vertex and `end` the range vertex; for
// the empty path both are the same vertex.
struct Path {
  VertexId base = 0;
  VertexId end = 0;
  std::vector<Edge> edges;

  static Path at(VertexId v) { return Path{v, v, {}}; }
  // Throws InvalidPath when consecutive edges are not composable.
  static Path from_edges(const Graph& g, VertexId base, std::vector<Edge> edges);

  size_t length() const { return edges.size(); }
  bool empty() const { return edges.empty(); }

  // Appends an edge; throws InvalidPath unless source(e) == end.
  Path extended(const Graph& g, const Edge& e) const;
  Path concat(const Path& tail) const;  // requires tail.base == end
  Path prefix(size_t n, const Graph& g) const;
  Path suffix_from(size_t n, const Graph& g) const;

  bool is_prefix_of(const Path& other) const;

  bool operator==(const Path& other) const {
    return base == other.base && edges == other.edges;
  }
  // Shortlex order on edges; the base vertex only separates empty paths.
  std::strong_ordering operator<=>(const Path& other) const;
};

// Neither path extends the other.
bool paths_disjoint(const Path& a, const Path& b);

}  // namespace ggt

#endif  // GGT_PATH_HPP_
