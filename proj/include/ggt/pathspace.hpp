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

// Compact open subsets of the boundary path space: punctured cylinders
// Z(mu \ F) and finite disjoint unions of them.

#ifndef GGT_PATHSPACE_HPP_
#define GGT_PATHSPACE_HPP_

#include <compare>
#include <optional>
#include <vector>

#include "ggt/graph.hpp"
#include "ggt/path.hpp"

namespace ggt {

// Z(mu \ F): boundary paths extending mu whose next edge (if any) is not in F.
struct Piece {
  Path mu;
  std::vector<Edge> punctures;  // sorted, each emitted by r(mu)

  bool operator==(const Piece& other) const = default;
  std::strong_ordering operator<=>(const Piece& other) const;
};

// Sorts and deduplicates punctures; throws InvalidPath when one is not
// emitted by r(mu).
Piece make_piece(const Graph& g, Path mu, std::vector<Edge> punctures = {});

// True when the punctures exhaust a regular range.
bool piece_empty(const Graph& g, const Piece& p);

std::optional<Piece> intersect_pieces(const Graph& g, const Piece& a, const Piece& b);

// An eventually periodic boundary path: prefix followed by cycle repeated
// forever, or a finite path ending at a singular vertex when `cycle` is
// absent. make() brings the cycle to primitive form and rolls the prefix back
// as far as possible, so equal points have equal representations.
struct BoundaryPoint {
  Path prefix;
  std::optional<Path> cycle;

  static BoundaryPoint make(const Graph& g, Path prefix, std::optional<Path> cycle);

  bool finite() const { return !cycle.has_value(); }
  Edge edge_at(size_t i) const;
  // The point with its first n edges removed (n <= prefix length for finite
  // points).
  BoundaryPoint drop(const Graph& g, size_t n) const;
  BoundaryPoint prepend(const Graph& g, const Path& p) const;

  bool operator==(const BoundaryPoint& other) const = default;
  auto operator<=>(const BoundaryPoint& other) const = default;
};

bool piece_contains(const Piece& p, const BoundaryPoint& x);

// The unique point of a singleton piece, or absent when the piece holds more
// than one point. A piece is a singleton iff it has no punctures and the
// unique out-edges from r(mu) lead to a sink or back to a visited vertex.
std::optional<BoundaryPoint> singleton_point(const Graph& g, const Piece& p);

class Clopen {
 public:
  // One node per prefix. At a singular vertex a split node records whether the
  // finite path itself belongs to the set (`point_in`); children not listed
  // in `keys` have state Full when point_in holds and Empty otherwise. At a
  // regular vertex unlisted children are Empty. Nodes are kept normalized, so
  // structural equality coincides with set equality.
  struct Node {
    enum class State : uint8_t { kEmpty, kFull, kSplit };
    State state = State::kEmpty;
    bool point_in = false;
    std::vector<Edge> keys;
    std::vector<Node> kids;

    bool operator==(const Node& other) const = default;
  };

  Clopen() = default;
  explicit Clopen(GraphPtr g);  // the empty set

  static Clopen full(GraphPtr g);
  static Clopen from_piece(GraphPtr g, const Piece& p);
  static Clopen from_pieces(GraphPtr g, const std::vector<Piece>& ps);

  const GraphPtr& graph() const { return graph_; }

  bool is_empty() const;
  // Canonical pairwise disjoint pieces in Piece order.
  std::vector<Piece> pieces() const;

  Clopen operator|(const Clopen& other) const;
  Clopen operator&(const Clopen& other) const;
  Clopen operator-(const Clopen& other) const;
  Clopen operator^(const Clopen& other) const;
  Clopen complement() const;

  bool contains(const Clopen& other) const;
  bool intersects(const Clopen& other) const;
  bool member(const BoundaryPoint& x) const;

  // {to . y : from . y in this}; requires r(from) = r(to).
  Clopen transplant(const Path& from, const Path& to) const;

  // Longest prefix carrying information (punctures count one edge deeper).
  size_t depth() const;

  // Structural equality of normal forms.
  bool operator==(const Clopen& other) const;

 private:
  void check_same_graph(const Clopen& other) const;

  GraphPtr graph_;
  std::vector<Node> roots_;
};

Clopen intersect(const Clopen& a, const Clopen& b);
Clopen subtract(const Clopen& a, const Clopen& b);
Clopen unite(const Clopen& a, const Clopen& b);
bool is_empty(const Clopen& a);
// Set equality via empty symmetric difference.
bool equal(const Clopen& a, const Clopen& b);
bool member(const BoundaryPoint& x, const Clopen& a);

// The same set as pieces where every plain piece with regular range has been
// split until |mu| >= depth. Pieces over singular ranges keep their
// punctures. The result is not canonical.
std::vector<Piece> refine_to(const Clopen& a, size_t depth);

}  // namespace ggt

#endif  // GGT_PATHSPACE_HPP_
