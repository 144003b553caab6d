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

#include "ggt/pathspace.hpp"

#include <algorithm>
#include <map>

#include "ggt/error.hpp"

namespace ggt {

std::strong_ordering Piece::operator<=>(const Piece& other) const {
  if (auto c = mu <=> other.mu; c != 0) return c;
  if (auto c = punctures.size() <=> other.punctures.size(); c != 0) return c;
  return punctures <=> other.punctures;
}

Piece make_piece(const Graph& g, Path mu, std::vector<Edge> punctures) {
  for (const Edge& f : punctures) {
    if (!g.is_valid(f) || g.source(f) != mu.end) {
      throw Error(ErrorCode::kInvalidPath, "puncture " +
                                               (g.is_valid(f) ? g.edge_name(f) : "?") +
                                               " is not emitted by " + g.vertex_name(mu.end));
    }
  }
  std::sort(punctures.begin(), punctures.end());
  punctures.erase(std::unique(punctures.begin(), punctures.end()), punctures.end());
  return Piece{std::move(mu), std::move(punctures)};
}

bool piece_empty(const Graph& g, const Piece& p) {
  const VertexId v = p.mu.end;
  if (g.is_singular(v)) return false;
  return p.punctures.size() == g.out_slots(v).size();
}

std::optional<Piece> intersect_pieces(const Graph& g, const Piece& a, const Piece& b) {
  const Piece& s = a.mu.length() <= b.mu.length() ? a : b;
  const Piece& l = a.mu.length() <= b.mu.length() ? b : a;
  if (!s.mu.is_prefix_of(l.mu)) return std::nullopt;
  if (s.mu.length() == l.mu.length()) {
    std::vector<Edge> f = s.punctures;
    f.insert(f.end(), l.punctures.begin(), l.punctures.end());
    Piece p = make_piece(g, s.mu, std::move(f));
    if (piece_empty(g, p)) return std::nullopt;
    return p;
  }
  const Edge& next = l.mu.edges[s.mu.length()];
  if (std::binary_search(s.punctures.begin(), s.punctures.end(), next)) return std::nullopt;
  if (piece_empty(g, l)) return std::nullopt;
  return l;
}

// ---------------------------------------------------------------------------
// Boundary points.

BoundaryPoint BoundaryPoint::make(const Graph& g, Path prefix, std::optional<Path> cycle) {
  if (!cycle) {
    if (!g.is_singular(prefix.end)) {
      throw Error(ErrorCode::kInvalidPath,
                  "finite boundary path must end at a singular vertex, not " +
                      g.vertex_name(prefix.end));
    }
    return BoundaryPoint{std::move(prefix), std::nullopt};
  }
  Path c = std::move(*cycle);
  if (c.empty() || c.base != prefix.end || c.end != c.base) {
    throw Error(ErrorCode::kInvalidPath, "tail is not a nonempty cycle at the prefix end");
  }
  const size_t n = c.length();
  for (size_t p = 1; p < n; ++p) {
    if (n % p) continue;
    bool periodic = true;
    for (size_t i = p; i < n && periodic; ++i) periodic = c.edges[i] == c.edges[i - p];
    if (periodic) {
      c.edges.resize(p);
      c.end = c.base;
      break;
    }
  }
  while (!prefix.empty() && prefix.edges.back() == c.edges.back()) {
    const Edge last = prefix.edges.back();
    prefix.edges.pop_back();
    prefix.end = g.source(last);
    std::rotate(c.edges.rbegin(), c.edges.rbegin() + 1, c.edges.rend());
    c.base = c.end = prefix.end;
  }
  return BoundaryPoint{std::move(prefix), std::move(c)};
}

Edge BoundaryPoint::edge_at(size_t i) const {
  if (i < prefix.length()) return prefix.edges[i];
  GGT_CHECK(cycle.has_value(), "edge index past a finite boundary path");
  return cycle->edges[(i - prefix.length()) % cycle->length()];
}

BoundaryPoint BoundaryPoint::drop(const Graph& g, size_t n) const {
  if (n <= prefix.length()) {
    return make(g, prefix.suffix_from(n, g), cycle);
  }
  GGT_CHECK(cycle.has_value(), "cannot drop past the end of a finite path");
  const size_t k = (n - prefix.length()) % cycle->length();
  Path rotated = cycle->suffix_from(k, g).concat(cycle->prefix(k, g));
  return make(g, Path::at(rotated.base), rotated);
}

BoundaryPoint BoundaryPoint::prepend(const Graph& g, const Path& p) const {
  return make(g, p.concat(prefix), cycle);
}

bool piece_contains(const Piece& p, const BoundaryPoint& x) {
  if (x.prefix.base != p.mu.base) return false;
  for (size_t i = 0; i < p.mu.length(); ++i) {
    if (x.finite() && i >= x.prefix.length()) return false;
    if (x.edge_at(i) != p.mu.edges[i]) return false;
  }
  if (x.finite() && x.prefix.length() == p.mu.length()) return true;
  return !std::binary_search(p.punctures.begin(), p.punctures.end(), x.edge_at(p.mu.length()));
}

std::optional<BoundaryPoint> singleton_point(const Graph& g, const Piece& p) {
  if (!p.punctures.empty()) return std::nullopt;
  std::map<VertexId, size_t> seen;
  std::vector<Edge> walk;
  VertexId v = p.mu.end;
  while (true) {
    if (auto it = seen.find(v); it != seen.end()) {
      Path head = p.mu;
      for (size_t i = 0; i < it->second; ++i) head = head.extended(g, walk[i]);
      Path cyc = Path::at(v);
      for (size_t i = it->second; i < walk.size(); ++i) cyc = cyc.extended(g, walk[i]);
      return BoundaryPoint::make(g, head, cyc);
    }
    if (g.is_sink(v)) {
      return BoundaryPoint::make(g, Path::from_edges(g, p.mu.base, [&] {
                                   auto e = p.mu.edges;
                                   e.insert(e.end(), walk.begin(), walk.end());
                                   return e;
                                 }()),
                                 std::nullopt);
    }
    if (g.is_infinite_emitter(v) || g.out_slots(v).size() != 1) return std::nullopt;
    seen.emplace(v, walk.size());
    walk.push_back(Edge{g.out_slots(v)[0], 0});
    v = g.range(walk.back());
  }
}

// ---------------------------------------------------------------------------
// Trie machinery.

namespace {

using Node = Clopen::Node;
using State = Node::State;

const Node& empty_node() {
  static const Node n{State::kEmpty, false, {}, {}};
  return n;
}
const Node& full_node() {
  static const Node n{State::kFull, false, {}, {}};
  return n;
}
Node constant(bool full) { return full ? full_node() : empty_node(); }

bool is_const(const Node& n) { return n.state != State::kSplit; }

const Node& child(const Graph& g, VertexId v, const Node& n, const Edge& e) {
  if (n.state == State::kFull) return full_node();
  if (n.state == State::kEmpty) return empty_node();
  auto it = std::lower_bound(n.keys.begin(), n.keys.end(), e);
  if (it != n.keys.end() && *it == e) return n.kids[static_cast<size_t>(it - n.keys.begin())];
  return g.is_singular(v) && n.point_in ? full_node() : empty_node();
}

void normalize(const Graph& g, VertexId v, Node& n) {
  if (n.state != State::kSplit) {
    n.point_in = false;
    n.keys.clear();
    n.kids.clear();
    return;
  }
  if (g.is_singular(v)) {
    const State def = n.point_in ? State::kFull : State::kEmpty;
    size_t w = 0;
    for (size_t i = 0; i < n.kids.size(); ++i) {
      if (n.kids[i].state == def) continue;
      if (w != i) {
        n.keys[w] = n.keys[i];
        n.kids[w] = std::move(n.kids[i]);
      }
      ++w;
    }
    n.keys.resize(w);
    n.kids.resize(w);
    if (w == 0) n = constant(n.point_in);
    return;
  }
  n.point_in = false;
  size_t w = 0;
  bool all_full = true;
  for (size_t i = 0; i < n.kids.size(); ++i) {
    if (n.kids[i].state == State::kEmpty) continue;
    all_full &= n.kids[i].state == State::kFull;
    if (w != i) {
      n.keys[w] = n.keys[i];
      n.kids[w] = std::move(n.kids[i]);
    }
    ++w;
  }
  n.keys.resize(w);
  n.kids.resize(w);
  if (w == 0) {
    n = empty_node();
  } else if (all_full && w == g.out_slots(v).size()) {
    n = full_node();
  }
}

// Regular split nodes list their nonempty children; complementing must
// therefore enumerate every out-edge. Singular nodes flip point_in.
Node complement_at(const Graph& g, VertexId v, const Node& n) {
  if (is_const(n)) return constant(n.state == State::kEmpty);
  Node out;
  out.state = State::kSplit;
  if (g.is_singular(v)) {
    out.point_in = !n.point_in;
    out.keys = n.keys;
    for (size_t i = 0; i < n.kids.size(); ++i) {
      out.kids.push_back(complement_at(g, g.range(n.keys[i]), n.kids[i]));
    }
  } else {
    for (uint32_t s : g.out_slots(v)) {
      const Edge e{s, 0};
      out.keys.push_back(e);
      out.kids.push_back(complement_at(g, g.range(e), child(g, v, n, e)));
    }
  }
  normalize(g, v, out);
  return out;
}

enum class Op { kAnd, kOr, kAndNot, kXor };

bool eval(Op op, bool x, bool y) {
  switch (op) {
    case Op::kAnd:
      return x && y;
    case Op::kOr:
      return x || y;
    case Op::kAndNot:
      return x && !y;
    case Op::kXor:
      return x != y;
  }
  return false;
}

Node combine(const Graph& g, VertexId v, const Node& a, const Node& b, Op op) {
  if (is_const(a) && is_const(b)) {
    return constant(eval(op, a.state == State::kFull, b.state == State::kFull));
  }
  // With one side constant the result is constant, the other side, or its
  // complement.
  if (is_const(a) || is_const(b)) {
    const bool a_const = is_const(a);
    const bool c = (a_const ? a : b).state == State::kFull;
    const bool f0 = a_const ? eval(op, c, false) : eval(op, false, c);
    const bool f1 = a_const ? eval(op, c, true) : eval(op, true, c);
    if (f0 == f1) return constant(f0);
    const Node& other = a_const ? b : a;
    return f1 ? other : complement_at(g, v, other);
  }
  Node out;
  out.state = State::kSplit;
  if (g.is_singular(v)) {
    out.point_in = eval(op, a.point_in, b.point_in);
    std::vector<Edge> keys;
    std::set_union(a.keys.begin(), a.keys.end(), b.keys.begin(), b.keys.end(),
                   std::back_inserter(keys));
    for (const Edge& e : keys) {
      out.keys.push_back(e);
      out.kids.push_back(combine(g, g.range(e), child(g, v, a, e), child(g, v, b, e), op));
    }
  } else {
    for (uint32_t s : g.out_slots(v)) {
      const Edge e{s, 0};
      out.keys.push_back(e);
      out.kids.push_back(combine(g, g.range(e), child(g, v, a, e), child(g, v, b, e), op));
    }
  }
  normalize(g, v, out);
  return out;
}

// Node at v holding exactly the points of Z(p) for a path p starting at v,
// with `tail` describing the set below r(p).
Node wrap(const Graph& g, const Path& p, Node tail) {
  for (size_t i = p.length(); i > 0; --i) {
    const Edge& e = p.edges[i - 1];
    if (tail.state == State::kEmpty) break;
    Node up;
    up.state = State::kSplit;
    up.point_in = false;
    up.keys = {e};
    up.kids.push_back(std::move(tail));
    normalize(g, g.source(e), up);
    tail = std::move(up);
  }
  return tail;
}

void collect(const Graph& g, const Node& n, Path& mu, std::vector<Piece>& out) {
  if (n.state == State::kEmpty) return;
  if (n.state == State::kFull) {
    out.push_back(Piece{mu, {}});
    return;
  }
  const VertexId v = mu.end;
  if (g.is_singular(v) && n.point_in) out.push_back(Piece{mu, n.keys});
  for (size_t i = 0; i < n.keys.size(); ++i) {
    Path next = mu.extended(g, n.keys[i]);
    collect(g, n.kids[i], next, out);
  }
}

size_t node_depth(const Node& n) {
  if (n.state != State::kSplit) return 0;
  size_t d = 1;
  for (const Node& k : n.kids) d = std::max(d, 1 + node_depth(k));
  return d;
}

}  // namespace

Clopen::Clopen(GraphPtr g) : graph_(std::move(g)) {
  GGT_CHECK(graph_ != nullptr, "clopen needs a graph");
  roots_.assign(graph_->num_vertices(), empty_node());
}

Clopen Clopen::full(GraphPtr g) {
  Clopen c(std::move(g));
  c.roots_.assign(c.graph_->num_vertices(), full_node());
  return c;
}

Clopen Clopen::from_piece(GraphPtr g, const Piece& p) {
  Clopen c(std::move(g));
  const Graph& gr = *c.graph_;
  Piece q = make_piece(gr, p.mu, p.punctures);
  const VertexId v = q.mu.end;
  Node tail;
  if (q.punctures.empty()) {
    tail = full_node();
  } else {
    tail.state = State::kSplit;
    if (gr.is_singular(v)) {
      tail.point_in = true;
      tail.keys = q.punctures;
      tail.kids.assign(q.punctures.size(), empty_node());
    } else {
      for (uint32_t s : gr.out_slots(v)) {
        const Edge e{s, 0};
        if (std::binary_search(q.punctures.begin(), q.punctures.end(), e)) continue;
        tail.keys.push_back(e);
        tail.kids.push_back(full_node());
      }
    }
    normalize(gr, v, tail);
  }
  c.roots_[q.mu.base] = wrap(gr, q.mu, std::move(tail));
  return c;
}

Clopen Clopen::from_pieces(GraphPtr g, const std::vector<Piece>& ps) {
  Clopen c(g);
  for (const Piece& p : ps) c = c | from_piece(g, p);
  return c;
}

void Clopen::check_same_graph(const Clopen& other) const {
  if (graph_ != other.graph_ && !(graph_ && other.graph_ && *graph_ == *other.graph_)) {
    throw Error(ErrorCode::kGraphMismatch, "clopen sets over different graphs");
  }
}

bool Clopen::is_empty() const {
  return std::all_of(roots_.begin(), roots_.end(),
                     [](const Node& n) { return n.state == State::kEmpty; });
}

std::vector<Piece> Clopen::pieces() const {
  std::vector<Piece> out;
  for (VertexId v = 0; v < roots_.size(); ++v) {
    Path mu = Path::at(v);
    collect(*graph_, roots_[v], mu, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Clopen Clopen::operator|(const Clopen& other) const {
  check_same_graph(other);
  Clopen out(graph_);
  for (VertexId v = 0; v < roots_.size(); ++v) {
    out.roots_[v] = combine(*graph_, v, roots_[v], other.roots_[v], Op::kOr);
  }
  return out;
}

Clopen Clopen::operator&(const Clopen& other) const {
  check_same_graph(other);
  Clopen out(graph_);
  for (VertexId v = 0; v < roots_.size(); ++v) {
    out.roots_[v] = combine(*graph_, v, roots_[v], other.roots_[v], Op::kAnd);
  }
  return out;
}

Clopen Clopen::operator-(const Clopen& other) const {
  check_same_graph(other);
  Clopen out(graph_);
  for (VertexId v = 0; v < roots_.size(); ++v) {
    out.roots_[v] = combine(*graph_, v, roots_[v], other.roots_[v], Op::kAndNot);
  }
  return out;
}

Clopen Clopen::operator^(const Clopen& other) const {
  check_same_graph(other);
  Clopen out(graph_);
  for (VertexId v = 0; v < roots_.size(); ++v) {
    out.roots_[v] = combine(*graph_, v, roots_[v], other.roots_[v], Op::kXor);
  }
  return out;
}

Clopen Clopen::complement() const {
  Clopen out(graph_);
  for (VertexId v = 0; v < roots_.size(); ++v) out.roots_[v] = complement_at(*graph_, v, roots_[v]);
  return out;
}

bool Clopen::contains(const Clopen& other) const { return (other - *this).is_empty(); }

bool Clopen::intersects(const Clopen& other) const { return !(*this & other).is_empty(); }

bool Clopen::member(const BoundaryPoint& x) const {
  const Graph& g = *graph_;
  const Node* n = &roots_[x.prefix.base];
  VertexId v = x.prefix.base;
  for (size_t i = 0;; ++i) {
    if (n->state == State::kFull) return true;
    if (n->state == State::kEmpty) return false;
    if (x.finite() && i == x.prefix.length()) return g.is_singular(v) && n->point_in;
    const Edge e = x.edge_at(i);
    n = &child(g, v, *n, e);
    v = g.range(e);
  }
}

Clopen Clopen::transplant(const Path& from, const Path& to) const {
  GGT_CHECK(from.end == to.end, "transplant between different range vertices");
  const Graph& g = *graph_;
  const Node* n = &roots_[from.base];
  VertexId v = from.base;
  for (const Edge& e : from.edges) {
    n = &child(g, v, *n, e);
    v = g.range(e);
  }
  Clopen out(graph_);
  out.roots_[to.base] = wrap(g, to, *n);
  return out;
}

size_t Clopen::depth() const {
  size_t d = 0;
  for (const Node& n : roots_) d = std::max(d, node_depth(n));
  return d;
}

bool Clopen::operator==(const Clopen& other) const {
  check_same_graph(other);
  return roots_ == other.roots_;
}

Clopen intersect(const Clopen& a, const Clopen& b) { return a & b; }
Clopen subtract(const Clopen& a, const Clopen& b) { return a - b; }
Clopen unite(const Clopen& a, const Clopen& b) { return a | b; }
bool is_empty(const Clopen& a) { return a.is_empty(); }
bool equal(const Clopen& a, const Clopen& b) { return (a ^ b).is_empty(); }
bool member(const BoundaryPoint& x, const Clopen& a) { return a.member(x); }

std::vector<Piece> refine_to(const Clopen& a, size_t depth) {
  const Graph& g = *a.graph();
  std::vector<Piece> work = a.pieces();
  std::vector<Piece> out;
  while (!work.empty()) {
    Piece p = std::move(work.back());
    work.pop_back();
    if (p.mu.length() >= depth || g.is_singular(p.mu.end)) {
      out.push_back(std::move(p));
      continue;
    }
    for (uint32_t s : g.out_slots(p.mu.end)) {
      const Edge e{s, 0};
      if (std::binary_search(p.punctures.begin(), p.punctures.end(), e)) continue;
      work.push_back(Piece{p.mu.extended(g, e), {}});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ggt
