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

#include "ggt/fullgroup.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "ggt/error.hpp"
#include "ggt/graphcore.hpp"

namespace ggt {

std::strong_ordering Block::operator<=>(const Block& other) const {
  if (auto c = source() <=> other.source(); c != 0) return c;
  return mu <=> other.mu;
}

Block make_block(const Graph& g, Path mu, std::vector<Edge> punctures, Path nu) {
  if (mu.end != nu.end) {
    throw Error(ErrorCode::kInvalidPath, "block paths end at " + g.vertex_name(mu.end) +
                                             " and " + g.vertex_name(nu.end));
  }
  Piece p = make_piece(g, std::move(mu), std::move(punctures));
  return Block{std::move(p.mu), std::move(p.punctures), std::move(nu)};
}

Element::Element(GraphPtr g, std::vector<Block> blocks)
    : graph_(std::move(g)), blocks_(std::move(blocks)) {
  GGT_CHECK(graph_ != nullptr, "element needs a graph");
}

Element Element::identity(GraphPtr g) { return Element(std::move(g), {}); }

namespace {

// Path suffix of `longer` after its prefix `shorter`.
Path strip(const Graph& g, const Path& longer, const Path& shorter) {
  GGT_CHECK(shorter.is_prefix_of(longer), "path is not a prefix");
  return longer.suffix_from(shorter.length(), g);
}

// The block restricted to the sub-piece `sub` of its source.
Block exchange(const Graph& g, const Block& b, const Piece& sub) {
  const Path lambda = strip(g, sub.mu, b.nu);
  return Block{b.mu.concat(lambda), sub.punctures, sub.mu};
}

// Splits punctures at regular ranges into plain blocks. Each output block
// carries the index of the input block it came from.
std::vector<std::pair<Block, size_t>> split_regular(const Graph& g, const std::vector<Block>& in) {
  std::vector<std::pair<Block, size_t>> out;
  for (size_t i = 0; i < in.size(); ++i) {
    const Block& b = in[i];
    const VertexId v = b.mu.end;
    if (b.punctures.empty() || g.is_singular(v)) {
      out.emplace_back(b, i);
      continue;
    }
    for (uint32_t s : g.out_slots(v)) {
      const Edge e{s, 0};
      if (std::binary_search(b.punctures.begin(), b.punctures.end(), e)) continue;
      out.emplace_back(Block{b.mu.extended(g, e), {}, b.nu.extended(g, e)}, i);
    }
  }
  return out;
}

std::string block_pair(size_t i, size_t j) {
  return "blocks " + std::to_string(i + 1) + " and " + std::to_string(j + 1);
}

}  // namespace

PieceIndex::PieceIndex(const Graph& g, const std::vector<Piece>& pieces) : pieces_(pieces) {
  for (size_t i = 0; i < pieces_.size(); ++i) {
    const Path& mu = pieces_[i].mu;
    exact_[mu].push_back(i);
    for (size_t n = 0; n < mu.length(); ++n) longer_[mu.prefix(n, g)].push_back(i);
  }
}

std::vector<size_t> PieceIndex::candidates(const Graph& g, const Path& mu) const {
  std::vector<size_t> out;
  for (size_t n = 0; n <= mu.length(); ++n) {
    auto it = exact_.find(n == mu.length() ? mu : mu.prefix(n, g));
    if (it != exact_.end()) out.insert(out.end(), it->second.begin(), it->second.end());
  }
  if (auto it = longer_.find(mu); it != longer_.end()) {
    out.insert(out.end(), it->second.begin(), it->second.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<size_t> PieceIndex::meeting(const Graph& g, const Piece& p) const {
  std::vector<size_t> out;
  for (size_t i : candidates(g, p.mu)) {
    if (intersect_pieces(g, p, pieces_[i])) out.push_back(i);
  }
  return out;
}

namespace {

// Reports the first overlapping pair in (i, j) order, sources before ranges.
void check_disjoint(const Graph& g, const std::vector<std::pair<Block, size_t>>& bs) {
  std::vector<Piece> sources, ranges;
  for (const auto& [b, i] : bs) {
    sources.push_back(b.source());
    ranges.push_back(b.range());
  }
  std::optional<std::pair<size_t, size_t>> bad_source, bad_range;
  auto scan = [&](const std::vector<Piece>& ps, std::optional<std::pair<size_t, size_t>>& bad) {
    const PieceIndex index(g, ps);
    for (size_t i = 0; i < ps.size(); ++i) {
      for (size_t j : index.meeting(g, ps[i])) {
        if (j <= i) continue;
        if (!bad || std::make_pair(i, j) < *bad) bad = std::make_pair(i, j);
        break;
      }
    }
  };
  scan(sources, bad_source);
  scan(ranges, bad_range);
  if (bad_source && (!bad_range || *bad_source <= *bad_range)) {
    throw Error(ErrorCode::kSourcesOverlap, "sources of " +
                                                block_pair(bs[bad_source->first].second,
                                                           bs[bad_source->second].second) +
                                                " overlap");
  }
  if (bad_range) {
    throw Error(ErrorCode::kRangesOverlap, "ranges of " +
                                               block_pair(bs[bad_range->first].second,
                                                          bs[bad_range->second].second) +
                                               " overlap");
  }
}

// Merges (mu e, -, nu e) over all e at a regular vertex into (mu, -, nu), and
// (mu, F, nu) with (mu f, -, nu f) for f in F into (mu, F - f, nu).
void merge_siblings(const Graph& g, std::vector<Block>& blocks) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<std::pair<Path, Path>, std::vector<size_t>> groups;
    std::map<std::pair<Path, Path>, size_t> by_paths;
    for (size_t i = 0; i < blocks.size(); ++i) {
      const Block& b = blocks[i];
      if (b.punctures.empty()) by_paths.emplace(std::make_pair(b.mu, b.nu), i);
      if (!b.punctures.empty() || b.mu.empty() || b.nu.empty()) continue;
      if (b.mu.edges.back() != b.nu.edges.back()) continue;
      const Edge e = b.mu.edges.back();
      if (!g.is_regular(g.source(e))) continue;
      groups[{b.mu.prefix(b.mu.length() - 1, g), b.nu.prefix(b.nu.length() - 1, g)}].push_back(i);
    }
    std::vector<bool> drop(blocks.size(), false);
    std::vector<Block> added;
    for (auto& [key, idx] : groups) {
      const VertexId v = key.first.end;
      if (idx.size() != g.out_slots(v).size()) continue;
      for (size_t i : idx) drop[i] = true;
      added.push_back(Block{key.first, {}, key.second});
      changed = true;
    }
    if (!changed) {
      for (size_t i = 0; i < blocks.size() && !changed; ++i) {
        Block& b = blocks[i];
        for (size_t k = 0; k < b.punctures.size(); ++k) {
          const Edge f = b.punctures[k];
          auto it = by_paths.find({b.mu.extended(g, f), b.nu.extended(g, f)});
          if (it == by_paths.end()) continue;
          drop[it->second] = true;
          Block merged = b;
          merged.punctures.erase(merged.punctures.begin() + static_cast<long>(k));
          drop[i] = true;
          added.push_back(std::move(merged));
          changed = true;
          break;
        }
      }
    }
    if (!changed) break;
    std::vector<Block> next;
    for (size_t i = 0; i < blocks.size(); ++i) {
      if (!drop[i]) next.push_back(std::move(blocks[i]));
    }
    for (Block& b : added) next.push_back(std::move(b));
    blocks = std::move(next);
  }
  std::sort(blocks.begin(), blocks.end());
}

// Shortest prefix of x, no shorter than its stored prefix, ending at the
// least vertex on its cycle.
Path anchor(const Graph& g, const BoundaryPoint& x) {
  VertexId b = x.cycle->base;
  for (const Edge& e : x.cycle->edges) b = std::min(b, g.range(e));
  Path p = x.prefix;
  for (size_t i = 0; p.end != b; ++i) p = p.extended(g, x.cycle->edges[i]);
  return p;
}

}  // namespace

Element validate_element(const Element& e) {
  const Graph& g = *e.graph();
  for (const Block& b : e.blocks()) {
    make_block(g, b.mu, b.punctures, b.nu);
    if (b.nu.base >= g.num_vertices() || b.mu.base >= g.num_vertices()) {
      throw Error(ErrorCode::kInvalidPath, "block path leaves the graph");
    }
  }
  auto split = split_regular(g, e.blocks());
  check_disjoint(g, split);
  std::vector<Piece> sources, ranges;
  for (const auto& [b, i] : split) {
    sources.push_back(b.source());
    ranges.push_back(b.range());
  }
  if (!(Clopen::from_pieces(e.graph(), sources) == Clopen::from_pieces(e.graph(), ranges))) {
    throw Error(ErrorCode::kCarrierMismatch, "union of sources differs from union of ranges");
  }
  std::vector<Block> out;
  for (auto& [b, i] : split) {
    if (b.mu == b.nu) continue;
    if (auto x = singleton_point(g, b.source())) {
      const BoundaryPoint y = x->drop(g, b.nu.length()).prepend(g, b.mu);
      if (*x == y) continue;
      if (x->finite()) {
        out.push_back(Block{y.prefix, {}, x->prefix});
      } else {
        out.push_back(Block{anchor(g, y), {}, anchor(g, *x)});
      }
      continue;
    }
    out.push_back(b);
  }
  merge_siblings(g, out);
  return Element(e.graph(), std::move(out));
}

Element make_element(GraphPtr g, std::vector<Block> blocks) {
  return validate_element(Element(std::move(g), std::move(blocks)));
}

Clopen carrier(const Element& e) {
  std::vector<Piece> ps;
  for (const Block& b : e.blocks()) ps.push_back(b.source());
  return Clopen::from_pieces(e.graph(), ps);
}

Clopen support(const Element& e) { return carrier(e); }

Element compose(const Element& f, const Element& g) {
  const GraphPtr& gp = f.graph();
  if (!(*gp == *g.graph())) throw Error(ErrorCode::kGraphMismatch, "elements over different graphs");
  const Graph& gr = *gp;
  std::vector<Piece> f_sources, g_ranges;
  for (const Block& fb : f.blocks()) f_sources.push_back(fb.source());
  for (const Block& gb : g.blocks()) g_ranges.push_back(gb.range());
  const PieceIndex f_index(gr, f_sources), g_index(gr, g_ranges);
  std::vector<Block> out;
  for (const Block& gb : g.blocks()) {
    const Piece r = gb.range();
    std::vector<Piece> covered;
    for (size_t k : f_index.meeting(gr, r)) {
      const Block& fb = f.blocks()[k];
      auto i = intersect_pieces(gr, r, fb.source());
      const Path lambda = strip(gr, i->mu, gb.mu);
      const Path kappa = strip(gr, i->mu, fb.nu);
      out.push_back(Block{fb.mu.concat(kappa), i->punctures, gb.nu.concat(lambda)});
      covered.push_back(fb.source());
    }
    const Clopen rest = Clopen::from_piece(gp, r) - Clopen::from_pieces(gp, covered);
    for (const Piece& p : rest.pieces()) {
      auto q = intersect_pieces(gr, p, r);
      GGT_CHECK(q.has_value(), "leftover piece escapes its range piece");
      const Path lambda = strip(gr, q->mu, gb.mu);
      out.push_back(Block{q->mu, q->punctures, gb.nu.concat(lambda)});
    }
  }
  for (const Block& fb : f.blocks()) {
    const Piece s = fb.source();
    std::vector<Piece> covered;
    for (size_t k : g_index.meeting(gr, s)) covered.push_back(g_ranges[k]);
    const Clopen rest = Clopen::from_piece(gp, s) - Clopen::from_pieces(gp, covered);
    for (const Piece& p : rest.pieces()) {
      auto q = intersect_pieces(gr, p, s);
      GGT_CHECK(q.has_value(), "leftover piece escapes its source piece");
      const Path kappa = strip(gr, q->mu, fb.nu);
      out.push_back(Block{fb.mu.concat(kappa), q->punctures, q->mu});
    }
  }
  return make_element(gp, std::move(out));
}

Element inverse(const Element& e) {
  std::vector<Block> out;
  for (const Block& b : e.blocks()) out.push_back(Block{b.nu, b.punctures, b.mu});
  return make_element(e.graph(), std::move(out));
}

BoundaryPoint apply(const Element& e, const BoundaryPoint& x) {
  const Graph& g = *e.graph();
  for (const Block& b : e.blocks()) {
    if (piece_contains(b.source(), x)) return x.drop(g, b.nu.length()).prepend(g, b.mu);
  }
  return x;
}

Clopen image(const Element& e, const Clopen& a) {
  Clopen out = a - carrier(e);
  for (const Block& b : e.blocks()) {
    Clopen part = a & Clopen::from_piece(e.graph(), b.source());
    out = out | part.transplant(b.nu, b.mu);
  }
  return out;
}

bool Element::operator==(const Element& other) const {
  const Graph& g = *graph_;
  if (!(g == *other.graph_)) return false;
  if (!(carrier(*this) == carrier(other))) return false;
  std::vector<Piece> other_sources;
  for (const Block& b : other.blocks_) other_sources.push_back(b.source());
  const PieceIndex index(g, other_sources);
  for (const Block& a : blocks_) {
    for (size_t k : index.meeting(g, a.source())) {
      const Block& b = other.blocks_[k];
      auto i = intersect_pieces(g, a.source(), b.source());
      const Path ia = a.mu.concat(strip(g, i->mu, a.nu));
      const Path ib = b.mu.concat(strip(g, i->mu, b.nu));
      if (ia == ib) continue;
      // Different prefix exchanges can only agree on a single point.
      auto x = singleton_point(g, *i);
      if (!x) return false;
      if (!(apply(*this, *x) == apply(other, *x))) return false;
    }
  }
  return true;
}

bool equal_by_quotient(const Element& a, const Element& b) {
  return compose(a, inverse(b)).is_identity();
}

Clopen GradedPartition::part(long k) const {
  auto it = parts.find(k);
  return it == parts.end() ? Clopen(ambient.graph()) : it->second;
}

GradedPartition graded_partition(const Element& e) {
  GradedPartition gp;
  gp.ambient = Clopen::full(e.graph());
  std::map<long, std::vector<Piece>> by_lag;
  for (const Block& b : e.blocks()) by_lag[b.lag()].push_back(b.source());
  Clopen rest = gp.ambient - carrier(e);
  for (auto& [k, ps] : by_lag) {
    Clopen c = Clopen::from_pieces(e.graph(), ps);
    if (k == 0) c = c | rest;
    gp.parts.emplace(k, c);
  }
  if (!rest.is_empty() && !gp.parts.count(0)) gp.parts.emplace(0, rest);
  return gp;
}

Bisection normalize_bisection(const Graph& g, const Bisection& w) {
  for (const Block& b : w) make_block(g, b.mu, b.punctures, b.nu);
  auto split = split_regular(g, w);
  check_disjoint(g, split);
  Bisection out;
  for (auto& [b, i] : split) out.push_back(std::move(b));
  merge_siblings(g, out);
  return out;
}

Clopen bisection_source(const GraphPtr& g, const Bisection& w) {
  std::vector<Piece> ps;
  for (const Block& b : w) ps.push_back(b.source());
  return Clopen::from_pieces(g, ps);
}

Clopen bisection_range(const GraphPtr& g, const Bisection& w) {
  std::vector<Piece> ps;
  for (const Block& b : w) ps.push_back(b.range());
  return Clopen::from_pieces(g, ps);
}

Bisection invert_bisection(const Bisection& w) {
  Bisection out;
  for (const Block& b : w) out.push_back(Block{b.nu, b.punctures, b.mu});
  return out;
}

Bisection compose_bisections(const GraphPtr& g, const Bisection& w, const Bisection& v) {
  const Graph& gr = *g;
  std::vector<Piece> w_sources;
  for (const Block& wb : w) w_sources.push_back(wb.source());
  const PieceIndex index(gr, w_sources);
  Bisection out;
  for (const Block& vb : v) {
    for (size_t k : index.meeting(gr, vb.range())) {
      const Block& wb = w[k];
      auto i = intersect_pieces(gr, vb.range(), wb.source());
      const Path lambda = strip(gr, i->mu, vb.mu);
      const Path kappa = strip(gr, i->mu, wb.nu);
      out.push_back(Block{wb.mu.concat(kappa), i->punctures, vb.nu.concat(lambda)});
    }
  }
  return normalize_bisection(gr, out);
}

Bisection restrict_bisection(const GraphPtr& g, const Bisection& w, const Clopen& a) {
  const Graph& gr = *g;
  Bisection out;
  for (const Block& b : w) {
    const Piece s = b.source();
    for (const Piece& p : (Clopen::from_piece(g, s) & a).pieces()) {
      auto q = intersect_pieces(gr, p, s);
      GGT_CHECK(q.has_value(), "restricted piece escapes its source");
      out.push_back(exchange(gr, b, *q));
    }
  }
  return normalize_bisection(gr, out);
}

Element transposition(const GraphPtr& g, const Bisection& w) {
  Bisection nb = normalize_bisection(*g, w);
  if (bisection_source(g, nb).intersects(bisection_range(g, nb))) {
    throw Error(ErrorCode::kOverlappingSourceRange, "source and range of the bisection overlap");
  }
  std::vector<Block> table = nb;
  for (const Block& b : invert_bisection(nb)) table.push_back(b);
  return make_element(g, std::move(table));
}

std::pair<Bisection, Bisection> doubling_bisections(const GraphPtr& g, const Clopen& a) {
  const Graph& gr = *g;
  if (!validate(gr).ah_criteria) {
    throw Error(ErrorCode::kCriteriaFailed, "doubling needs a graph satisfying the AH criteria");
  }
  if (a.is_empty()) throw Error(ErrorCode::kInvalidArgument, "doubling needs a nonempty set");
  std::vector<bool> in_core(gr.num_vertices(), false);
  for (VertexId v = 0; v < gr.num_vertices(); ++v) in_core[v] = !cyclic_component(gr, v).empty();
  Bisection w1, w2;
  const std::vector<Piece> start = a.pieces();
  std::deque<Piece> work(start.begin(), start.end());
  while (!work.empty()) {
    Piece p = std::move(work.front());
    work.pop_front();
    const VertexId v = p.mu.end;
    if (!in_core[v]) {
      GGT_CHECK(gr.is_regular(v) && p.punctures.empty(), "singular vertex outside the core");
      for (uint32_t s : gr.out_slots(v)) work.push_back(Piece{p.mu.extended(gr, Edge{s, 0}), {}});
      continue;
    }
    std::set<Edge> avoid(p.punctures.begin(), p.punctures.end());
    auto [c1, c2] = two_disjoint_cycles(gr, v, avoid);
    w1.push_back(Block{p.mu.concat(c1), p.punctures, p.mu});
    w2.push_back(Block{p.mu.concat(c2), p.punctures, p.mu});
  }
  return {normalize_bisection(gr, w1), normalize_bisection(gr, w2)};
}

ShrinkResult shrink_support(const Element& e) {
  if (e.is_identity()) throw Error(ErrorCode::kInvalidArgument, "identity has empty support");
  const Graph& g = *e.graph();
  const Block& b = e.blocks().front();
  Block w = b;
  if (!paths_disjoint(b.mu, b.nu)) {
    // One path extends the other; extend both by a common kappa until they
    // part ways.
    const VertexId v = b.nu.end;
    std::set<Edge> avoid(b.punctures.begin(), b.punctures.end());
    std::deque<Path> queue;
    for (uint32_t s : g.out_slots(v)) {
      for (int k = 0; k < 2; ++k) {
        auto m = g.least_member(s, avoid);
        if (!m) break;
        queue.push_back(Path::at(v).extended(g, *m));
        avoid.insert(*m);
      }
    }
    bool found = false;
    for (size_t steps = 0; !queue.empty() && steps < 100000; ++steps) {
      Path kappa = std::move(queue.front());
      queue.pop_front();
      if (paths_disjoint(b.mu.concat(kappa), b.nu.concat(kappa))) {
        w = Block{b.mu.concat(kappa), {}, b.nu.concat(kappa)};
        found = true;
        break;
      }
      for (uint32_t s : g.out_slots(kappa.end)) {
        std::set<Edge> used;
        for (int k = 0; k < 2; ++k) {
          auto m = g.least_member(s, used);
          if (!m) break;
          queue.push_back(kappa.extended(g, *m));
          used.insert(*m);
        }
      }
    }
    GGT_CHECK(found, "no separating extension for a non-identity block");
  }
  ShrinkResult r;
  r.z = Clopen::from_piece(e.graph(), w.source());
  r.tau = transposition(e.graph(), {w});
  r.e2 = compose(r.tau, e);
  return r;
}

}  // namespace ggt
