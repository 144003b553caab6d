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

// Homology of the graph groupoid from the vertex presentation, and classes
// in H0 of the AF kernel and of the skew product as atom vectors.

#ifndef GGT_CLASSGROUPS_HPP_
#define GGT_CLASSGROUPS_HPP_

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ggt/fullgroup.hpp"
#include "ggt/graph.hpp"
#include "ggt/intlin.hpp"
#include "ggt/pathspace.hpp"

namespace ggt {

struct HomologyReport {
  std::vector<Int> h0_torsion;
  size_t h0_free_rank = 0;
  size_t h1_rank = 0;
  // Kernel vectors indexed by the regular vertices in increasing order.
  std::vector<IntVector> h1_kernel_basis;
  std::vector<VertexId> regular_vertices;
  size_t h0_tensor_z2_rank = 0;
  std::string abelianization_note;

  // "H0 = Z^2 + Z/3" style lines followed by the remaining fields.
  std::string to_string(const Graph& g) const;
};

HomologyReport homology(const Graph& g);

// homology() with the abelianization note filled in. Throws CriteriaFailed
// unless the graph satisfies the AH criteria.
HomologyReport abelianization_report(const Graph& g);

// "H0 = ..." / "H1 = ..." group notation.
std::string format_group(size_t free_rank, const std::vector<Int>& torsion);

enum class Grading { kKernel, kSkew };

// Finite formal sum of atoms (v, n). The kernel grading only allows n >= 0.
struct ClassVector {
  Grading grading = Grading::kKernel;
  std::map<std::pair<VertexId, long>, Int> terms;  // no zero coefficients

  void add(VertexId v, long level, const Int& coeff);
  bool empty() const { return terms.empty(); }

  ClassVector operator+(const ClassVector& o) const;
  ClassVector operator-(const ClassVector& o) const;
  ClassVector operator-() const;
  bool operator==(const ClassVector& o) const = default;
};

ClassVector atom(VertexId v, long level, Grading grading = Grading::kKernel);

// "(v,2):+1 (w,3):-2", or "0".
std::string format_class(const Graph& g, const ClassVector& c);

// Shift every level by m. Throws NegativeLevel in the kernel grading.
ClassVector phi(const ClassVector& c, long m);

// Holds the graph and the eventual kernel used by the zero test, computed
// on first use.
class ClassContext {
 public:
  explicit ClassContext(GraphPtr g, size_t max_chain = 0);

  const GraphPtr& graph() const { return graph_; }

  // Throws SourcePresent when the graph has a source.
  ClassVector class_of(const Clopen& a, Grading grading = Grading::kKernel) const;
  ClassVector class_of(const Piece& p, Grading grading = Grading::kKernel) const;

  // Throws ChainLimitExceeded when the eventual kernel does not settle.
  bool is_zero(const ClassVector& c) const;
  bool equal(const ClassVector& a, const ClassVector& b) const { return is_zero(a - b); }

 private:
  const Lattice& stable_kernel() const;

  GraphPtr graph_;
  size_t max_chain_;
  mutable std::optional<Lattice> kernel_;
};

struct IndexResult {
  ClassVector c;
  bool zero = true;
};

// Index of e in H0 of the AF kernel. Throws NotEssential when the graph has
// sinks or sources.
IndexResult index(const ClassContext& ctx, const Element& e);

}  // namespace ggt

#endif  // GGT_CLASSGROUPS_HPP_
