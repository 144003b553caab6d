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

// Elements of the topological full group as bisection tables.
//
// A block (mu, F, nu) maps Z(nu \ F) onto Z(mu \ F) by exchanging the prefix
// nu for mu. An element is a finite table of blocks with disjoint sources,
// disjoint ranges and equal source and range unions; it acts as the identity
// off that carrier.

#ifndef GGT_FULLGROUP_HPP_
#define GGT_FULLGROUP_HPP_

#include <map>
#include <utility>
#include <vector>

#include "ggt/graph.hpp"
#include "ggt/path.hpp"
#include "ggt/pathspace.hpp"

namespace ggt {

struct Block {
  Path mu;
  std::vector<Edge> punctures;
  Path nu;

  Piece source() const { return Piece{nu, punctures}; }
  Piece range() const { return Piece{mu, punctures}; }
  long lag() const { return static_cast<long>(mu.length()) - static_cast<long>(nu.length()); }

  bool operator==(const Block& other) const = default;
  // Source piece first, then mu.
  std::strong_ordering operator<=>(const Block& other) const;
};

// Throws InvalidPath unless r(mu) = r(nu) and the punctures sit there.
Block make_block(const Graph& g, Path mu, std::vector<Edge> punctures, Path nu);

class Element {
 public:
  Element() = default;
  // Stores the table as given; use validate_element() to check and normalize.
  Element(GraphPtr g, std::vector<Block> blocks);

  static Element identity(GraphPtr g);

  const GraphPtr& graph() const { return graph_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  bool is_identity() const { return blocks_.empty(); }

  // Equality as homeomorphisms; both sides must be normalized.
  bool operator==(const Element& other) const;

 private:
  GraphPtr graph_;
  std::vector<Block> blocks_;
};

// Checks the table axioms and normalizes: punctures at regular ranges are
// split away, identity blocks and blocks fixing a single point are dropped,
// blocks on other single points become the canonical arrow between them,
// complete sibling families are merged, and blocks are sorted.
// Throws SourcesOverlap, RangesOverlap, CarrierMismatch.
Element validate_element(const Element& e);
Element make_element(GraphPtr g, std::vector<Block> blocks);

Element compose(const Element& f, const Element& g);  // x -> f(g(x))
Element inverse(const Element& e);
BoundaryPoint apply(const Element& e, const BoundaryPoint& x);

// Union of block sources.
Clopen carrier(const Element& e);
Clopen support(const Element& e);
Clopen image(const Element& e, const Clopen& a);

// Set equality of homeomorphisms by testing compose(a, inverse(b)) == id.
bool equal_by_quotient(const Element& a, const Element& b);

struct GradedPartition {
  std::map<long, Clopen> parts;  // nonempty parts only
  Clopen ambient;

  Clopen part(long k) const;
};

GradedPartition graded_partition(const Element& e);

// Lookup of the pieces whose paths are prefixes or extensions of a given
// path; only those can meet a piece over that path.
class PieceIndex {
 public:
  PieceIndex(const Graph& g, const std::vector<Piece>& pieces);

  // Indices of candidate pieces, ascending.
  std::vector<size_t> candidates(const Graph& g, const Path& mu) const;
  // Indices of the pieces meeting p, ascending.
  std::vector<size_t> meeting(const Graph& g, const Piece& p) const;

 private:
  std::vector<Piece> pieces_;
  std::map<Path, std::vector<size_t>> exact_;
  std::map<Path, std::vector<size_t>> longer_;  // keyed by proper prefixes
};

// Partial bisections: block lists with pairwise disjoint sources and ranges.
using Bisection = std::vector<Block>;

// Splits punctures at regular ranges, drops empty blocks and checks
// disjointness. Throws SourcesOverlap or RangesOverlap.
Bisection normalize_bisection(const Graph& g, const Bisection& w);
Clopen bisection_source(const GraphPtr& g, const Bisection& w);
Clopen bisection_range(const GraphPtr& g, const Bisection& w);
Bisection invert_bisection(const Bisection& w);
// W o V on V^{-1}(s(W)).
Bisection compose_bisections(const GraphPtr& g, const Bisection& w, const Bisection& v);
// The bisection restricted to sources inside `a`.
Bisection restrict_bisection(const GraphPtr& g, const Bisection& w, const Clopen& a);

// The involution w + w^{-1}, identity elsewhere. Throws OverlappingSourceRange.
Element transposition(const GraphPtr& g, const Bisection& w);

// Two bisections with source `a` and disjoint ranges inside `a`. The graph
// must satisfy the AH criteria and `a` must be nonempty.
std::pair<Bisection, Bisection> doubling_bisections(const GraphPtr& g, const Clopen& a);

struct ShrinkResult {
  Clopen z;      // nonempty, with e(z) disjoint from z
  Element tau;   // transposition agreeing with e on z
  Element e2;    // tau o e, fixing z pointwise
};

// Requires e != identity.
ShrinkResult shrink_support(const Element& e);

}  // namespace ggt

#endif  // GGT_FULLGROUP_HPP_
