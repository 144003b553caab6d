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

#include "ggt/classgroups.hpp"

#include <algorithm>

#include "ggt/error.hpp"
#include "ggt/graphcore.hpp"

namespace ggt {

namespace {

// Relation matrix: a column per regular vertex v holding
// delta_v - sum over e in vE^1 of delta_r(e).
IntMatrix relation_matrix(const Graph& g, const std::vector<VertexId>& regular) {
  IntMatrix m(g.num_vertices(), regular.size());
  for (size_t j = 0; j < regular.size(); ++j) {
    const VertexId v = regular[j];
    m.at(v, j) += 1;
    for (uint32_t s : g.out_slots(v)) m.at(g.slot(s).range, j) -= 1;
  }
  return m;
}

bool has_source(const Graph& g) {
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (g.is_source(v)) return true;
  }
  return false;
}

}  // namespace

std::string format_group(size_t free_rank, const std::vector<Int>& torsion) {
  std::vector<std::string> parts;
  if (free_rank > 0) parts.push_back("Z^" + std::to_string(free_rank));
  for (const Int& t : torsion) parts.push_back("Z/" + t.get_str());
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

HomologyReport homology(const Graph& g) {
  HomologyReport r;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (g.is_regular(v)) r.regular_vertices.push_back(v);
  }
  const IntMatrix m = relation_matrix(g, r.regular_vertices);
  const CokernelInvariants coker = cokernel_invariants(m);
  r.h0_torsion = coker.torsion;
  r.h0_free_rank = coker.free_rank;
  const Lattice ker = kernel(m);
  r.h1_rank = ker.rank();
  r.h1_kernel_basis = ker.basis();
  r.h0_tensor_z2_rank = r.h0_free_rank;
  for (const Int& t : r.h0_torsion) {
    if (mpz_even_p(t.get_mpz_t())) ++r.h0_tensor_z2_rank;
  }
  return r;
}

HomologyReport abelianization_report(const Graph& g) {
  const CriteriaReport crit = validate(g);
  if (!crit.ah_criteria) {
    throw Error(ErrorCode::kCriteriaFailed, "the abelianization bound needs the AH criteria");
  }
  HomologyReport r = homology(g);
  if (r.h1_rank == 0 && r.h0_tensor_z2_rank == 0) {
    r.abelianization_note = "abelianization = trivial";
  } else if (r.h0_tensor_z2_rank == 0) {
    r.abelianization_note = "abelianization = Z^" + std::to_string(r.h1_rank);
  } else {
    r.abelianization_note = "abelianization = Z^" + std::to_string(r.h1_rank) +
                            " + (Z/2)^N, 0 <= N <= " + std::to_string(r.h0_tensor_z2_rank);
  }
  return r;
}

std::string HomologyReport::to_string(const Graph& g) const {
  std::string out = "H0 = " + format_group(h0_free_rank, h0_torsion) + "\n";
  out += "H1 = " + format_group(h1_rank, {}) + "\n";
  out += "H0 (x) Z/2 rank = " + std::to_string(h0_tensor_z2_rank) + "\n";
  for (const IntVector& b : h1_kernel_basis) {
    out += "H1 generator:";
    for (size_t i = 0; i < b.size(); ++i) {
      if (b[i] != 0) out += " " + g.vertex_name(regular_vertices[i]) + ":" + b[i].get_str();
    }
    out += "\n";
  }
  if (!abelianization_note.empty()) out += abelianization_note + "\n";
  return out;
}

void ClassVector::add(VertexId v, long level, const Int& coeff) {
  if (coeff == 0) return;
  if (grading == Grading::kKernel && level < 0) {
    throw Error(ErrorCode::kNegativeLevel, "negative level in the kernel grading");
  }
  auto [it, fresh] = terms.try_emplace({v, level}, coeff);
  if (!fresh) {
    it->second += coeff;
    if (it->second == 0) terms.erase(it);
  }
}

ClassVector ClassVector::operator+(const ClassVector& o) const {
  ClassVector out = *this;
  if (o.grading == Grading::kSkew) out.grading = Grading::kSkew;
  for (const auto& [k, c] : o.terms) out.add(k.first, k.second, c);
  return out;
}

ClassVector ClassVector::operator-() const {
  ClassVector out = *this;
  for (auto& [k, c] : out.terms) c = -c;
  return out;
}

ClassVector ClassVector::operator-(const ClassVector& o) const { return *this + (-o); }

ClassVector atom(VertexId v, long level, Grading grading) {
  ClassVector c;
  c.grading = grading;
  c.add(v, level, 1);
  return c;
}

std::string format_class(const Graph& g, const ClassVector& c) {
  if (c.terms.empty()) return "0";
  std::string out;
  for (const auto& [k, coeff] : c.terms) {
    if (!out.empty()) out += " ";
    out += "(" + g.vertex_name(k.first) + "," + std::to_string(k.second) + "):" +
           (coeff > 0 ? "+" : "") + coeff.get_str();
  }
  return out;
}

ClassVector phi(const ClassVector& c, long m) {
  ClassVector out;
  out.grading = c.grading;
  for (const auto& [k, coeff] : c.terms) out.add(k.first, k.second + m, coeff);
  return out;
}

ClassContext::ClassContext(GraphPtr g, size_t max_chain)
    : graph_(std::move(g)), max_chain_(max_chain) {}

ClassVector ClassContext::class_of(const Piece& p, Grading grading) const {
  const Graph& g = *graph_;
  if (has_source(g)) {
    throw Error(ErrorCode::kSourcePresent, "classes need a graph without sources");
  }
  ClassVector c;
  c.grading = grading;
  const long n = static_cast<long>(p.mu.length());
  c.add(p.mu.end, n, 1);
  for (const Edge& f : p.punctures) c.add(g.range(f), n + 1, -1);
  return c;
}

ClassVector ClassContext::class_of(const Clopen& a, Grading grading) const {
  ClassVector c;
  c.grading = grading;
  if (has_source(*graph_)) {
    throw Error(ErrorCode::kSourcePresent, "classes need a graph without sources");
  }
  for (const Piece& p : a.pieces()) c = c + class_of(p, grading);
  return c;
}

const Lattice& ClassContext::stable_kernel() const {
  if (!kernel_) {
    const Graph& g = *graph_;
    const size_t n = g.num_vertices();
    // push[u][v]: number of edges v -> u, for regular v.
    IntMatrix push(n, n);
    std::vector<size_t> singular;
    for (VertexId v = 0; v < n; ++v) {
      if (g.is_singular(v)) {
        singular.push_back(v);
        continue;
      }
      for (uint32_t s : g.out_slots(v)) push.at(g.slot(s).range, v) += 1;
    }
    kernel_ = eventual_kernel(push, singular, max_chain_);
  }
  return *kernel_;
}

// The group is the direct limit of the stage groups G_N, free on the atoms
// at level N plus the singular atoms below N. Passing from G_N to G_{N+1}
// rewrites each regular (v, N) as the sum of (r(e), N+1) over e in vE^1 and
// keeps the singular atoms, so those span a free summand that survives to
// the limit. A vector therefore vanishes iff its singular atoms below the
// top level cancel and its top-level part is killed by some power of the
// rewriting without ever passing through a singular coordinate.
bool ClassContext::is_zero(const ClassVector& c) const {
  if (c.terms.empty()) return true;
  const Graph& g = *graph_;
  long lo = c.terms.begin()->first.second, hi = lo;
  for (const auto& [k, coeff] : c.terms) {
    lo = std::min(lo, k.second);
    hi = std::max(hi, k.second);
  }
  const size_t n = g.num_vertices();
  IntVector level(n);
  for (long cur = lo; cur <= hi; ++cur) {
    for (const auto& [k, coeff] : c.terms) {
      if (k.second == cur) level[k.first] += coeff;
    }
    if (cur == hi) break;
    IntVector next(n);
    for (VertexId v = 0; v < n; ++v) {
      if (level[v] == 0) continue;
      if (g.is_singular(v)) return false;
      for (uint32_t s : g.out_slots(v)) next[g.slot(s).range] += level[v];
    }
    level = std::move(next);
  }
  return stable_kernel().contains(level);
}

IndexResult index(const ClassContext& ctx, const Element& e) {
  const Graph& g = *ctx.graph();
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (g.is_sink(v) || g.is_source(v)) {
      throw Error(ErrorCode::kNotEssential,
                  "the index needs a graph without sinks or sources; " + g.vertex_name(v) +
                      (g.is_sink(v) ? " is a sink" : " is a source"));
    }
  }
  IndexResult r;
  // Blocks with lag k partition S(k), so summing per block source gives the
  // class of S(k) while keeping every shifted level nonnegative.
  for (const Block& b : e.blocks()) {
    const long k = b.lag();
    if (k == 0) continue;
    const ClassVector s = ctx.class_of(b.source());
    if (k > 0) {
      for (long j = 0; j < k; ++j) r.c = r.c - phi(s, j);
    } else {
      for (long j = k; j < 0; ++j) r.c = r.c + phi(s, j);
    }
  }
  GGT_CHECK(ctx.is_zero(r.c - phi(r.c, 1)), "index outside ker(id - phi)");
  r.zero = ctx.is_zero(r.c);
  return r;
}

}  // namespace ggt
