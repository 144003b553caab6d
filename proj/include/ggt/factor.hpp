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

// Factoring index-zero elements into transpositions.

#ifndef GGT_FACTOR_HPP_
#define GGT_FACTOR_HPP_

#include <map>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include "ggt/classgroups.hpp"
#include "ggt/fullgroup.hpp"

namespace ggt {

inline constexpr size_t kDefaultMaxDepth = 16;

// A lag-0 bisection with source `a` and range `b`. Pieces are matched level
// by level; unmatched pieces over regular vertices are split one level
// deeper. Throws NotEquivalent when the kernel classes differ and
// MatchingDepthExceeded past `max_depth` levels below the deepest input
// piece.
Bisection find_bisection(const ClassContext& ctx, const Clopen& a, const Clopen& b,
                         size_t max_depth = kDefaultMaxDepth);

// A bisection of constant lag n >= 1 with source `a` and range `b`; needs
// phi^n [a] = [b].
Bisection graded_cancellation(const ClassContext& ctx, const Clopen& a, const Clopen& b, long n,
                              size_t max_depth = kDefaultMaxDepth);

struct PathFamilies {
  size_t N = 0;
  std::map<std::pair<long, size_t>, Path> gamma0;               // (k, i), length N
  std::map<std::tuple<long, size_t, long>, Path> gammaP;        // (p, i, j), length N + j
  std::map<std::tuple<long, size_t, long>, Path> gammaQ;        // (q, i, l), length N - l
};

// Paths gamma ending at targets[k][i], with Z(gamma0) inside y \ a and the
// other two families inside a. P holds positive and Q negative integers;
// targets is keyed by k in Q, {0} and P. Throws HypothesesFailed.
PathFamilies construct_disjoint_paths(const GraphPtr& g, const Clopen& y, const Clopen& a,
                                      const std::set<long>& P, const std::set<long>& Q,
                                      const std::map<long, std::vector<VertexId>>& targets);

// Throws HypothesesFailed when a clause does not hold.
void check_path_families(const Graph& g, const PathFamilies& f, const Clopen& y, const Clopen& a,
                         const std::map<long, std::vector<VertexId>>& targets);

struct Factorization {
  // e = t[0] o t[1] o ... o t[n-1].
  std::vector<Element> transpositions;
  bool certified = false;
};

// Factors a lag-0 element. Throws InvalidArgument when a block has lag.
Factorization af_factor(const Element& e);

// Throws HypothesesFailed, IndexNonzero, MatchingDepthExceeded.
Factorization factor(const ClassContext& ctx, const Element& e,
                     size_t max_depth = kDefaultMaxDepth);

bool verify_product(const Element& e, const std::vector<Element>& fs);

}  // namespace ggt

#endif  // GGT_FACTOR_HPP_
