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

#include "ggt/factor.hpp"

#include <algorithm>

#include "ggt/error.hpp"
#include "ggt/graphcore.hpp"

namespace ggt {

namespace {

bool has_source(const Graph& g) {
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (g.is_source(v)) return true;
  }
  return false;
}

// Replaces a punctured piece over a regular vertex by its unpunctured
// children.
void push_normalized(const Graph& g, const Piece& p, std::vector<Piece>& out) {
  if (p.punctures.empty() || !g.is_regular(p.mu.end)) {
    out.push_back(p);
    return;
  }
  for (const Edge& e : g.concrete_out_edges(p.mu.end)) {
    if (!std::binary_search(p.punctures.begin(), p.punctures.end(), e)) {
      out.push_back(Piece{p.mu.extended(g, e), {}});
    }
  }
}

std::vector<Piece> children(const Graph& g, const Piece& p) {
  std::vector<Piece> out;
  for (const Edge& e : g.concrete_out_edges(p.mu.end)) out.push_back(Piece{p.mu.extended(g, e), {}});
  return out;
}

std::vector<Edge> set_union(const std::vector<Edge>& a, const std::vector<Edge>& b) {
  std::vector<Edge> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<Edge> set_minus(const std::vector<Edge>& a, const std::vector<Edge>& b) {
  std::vector<Edge> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void verify_bisection(const GraphPtr& g, const Bisection& w, const Clopen& a, const Clopen& b,
                      long lag) {
  GGT_CHECK(bisection_source(g, w) == a, "bisection source differs from the request");
  GGT_CHECK(bisection_range(g, w) == b, "bisection range differs from the request");
  for (const Block& blk : w) GGT_CHECK(blk.lag() == lag, "bisection block has the wrong lag");
}

Element compose_all(const GraphPtr& g, const std::vector<Element>& fs) {
  Element out = Element::identity(g);
  for (const Element& f : fs) out = compose(out, f);
  return out;
}

}  // namespace

Bisection find_bisection(const ClassContext& ctx, const Clopen& a, const Clopen& b,
                         size_t max_depth) {
  const GraphPtr& gp = ctx.graph();
  const Graph& g = *gp;
  if (!has_source(g) && !ctx.equal(ctx.class_of(a), ctx.class_of(b))) {
    throw Error(ErrorCode::kNotEquivalent, "the two sets have different kernel classes");
  }
  // Per level, the unmatched pieces of each side grouped by range vertex.
  using Side = std::map<size_t, std::map<VertexId, std::vector<Piece>>>;
  Side pa, pb;
  auto add = [&](Side& side, const Piece& p) {
    std::vector<Piece> ps;
    push_normalized(g, p, ps);
    for (const Piece& q : ps) side[q.mu.length()][q.mu.end].push_back(q);
  };
  for (const Piece& p : a.pieces()) add(pa, p);
  for (const Piece& p : b.pieces()) add(pb, p);
  const size_t cap = std::max(a.depth(), b.depth()) + max_depth;
  Bisection out;
  while (!pa.empty() || !pb.empty()) {
    size_t level = SIZE_MAX;
    if (!pa.empty()) level = pa.begin()->first;
    if (!pb.empty()) level = std::min(level, pb.begin()->first);
    if (level > cap) {
      throw Error(ErrorCode::kMatchingDepthExceeded,
                  "no matching found down to level " + std::to_string(cap));
    }
    auto la = std::move(pa[level]), lb = std::move(pb[level]);
    pa.erase(level);
    pb.erase(level);
    std::set<VertexId> vertices;
    for (const auto& [v, ps] : la) vertices.insert(v);
    for (const auto& [v, ps] : lb) vertices.insert(v);
    for (VertexId v : vertices) {
      auto& xs = la[v];
      auto& ys = lb[v];
      // Unpunctured pieces first so that most pairs need no split.
      auto order = [](const Piece& p, const Piece& q) {
        if (p.punctures.size() != q.punctures.size()) return p.punctures.size() < q.punctures.size();
        return p < q;
      };
      std::sort(xs.begin(), xs.end(), order);
      std::sort(ys.begin(), ys.end(), order);
      if (g.is_singular(v) && xs.size() != ys.size()) {
        // Atoms over singular vertices span free summands, so the counts
        // have to agree at every level.
        throw Error(ErrorCode::kNotEquivalent,
                    "unequal numbers of pieces over " + g.vertex_name(v) + " at level " +
                        std::to_string(level));
      }
      const size_t paired = std::min(xs.size(), ys.size());
      for (size_t i = 0; i < paired; ++i) {
        const Piece& x = xs[i];
        const Piece& y = ys[i];
        const std::vector<Edge> all = set_union(x.punctures, y.punctures);
        out.push_back(Block{y.mu, all, x.mu});
        for (const Edge& f : set_minus(all, x.punctures)) add(pa, Piece{x.mu.extended(g, f), {}});
        for (const Edge& f : set_minus(all, y.punctures)) add(pb, Piece{y.mu.extended(g, f), {}});
      }
      for (size_t i = paired; i < xs.size(); ++i)
        for (const Piece& c : children(g, xs[i])) add(pa, c);
      for (size_t i = paired; i < ys.size(); ++i)
        for (const Piece& c : children(g, ys[i])) add(pb, c);
    }
  }
  Bisection w = normalize_bisection(g, out);
  verify_bisection(gp, w, a, b, 0);
  return w;
}

Bisection graded_cancellation(const ClassContext& ctx, const Clopen& a, const Clopen& b, long n,
                              size_t max_depth) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "graded cancellation needs n >= 1");
  const GraphPtr& gp = ctx.graph();
  const Graph& g = *gp;
  if (!ctx.equal(phi(ctx.class_of(a), n), ctx.class_of(b))) {
    throw Error(ErrorCode::kNotEquivalent, "phi^" + std::to_string(n) + " of the first class is not the second");
  }
  Bisection v;
  std::vector<Piece> c_pieces;
  for (const Piece& p : a.pieces()) {
    auto gamma = find_path_into(g, p.mu.base, static_cast<size_t>(n));
    GGT_CHECK(gamma.has_value(), "no path of the requested length");
    Path longer = gamma->concat(p.mu);
    v.push_back(Block{longer, p.punctures, p.mu});
    c_pieces.push_back(Piece{longer, p.punctures});
  }
  const Clopen c = Clopen::from_pieces(gp, c_pieces);
  const Bisection w = find_bisection(ctx, c, b, max_depth);
  Bisection u = normalize_bisection(g, compose_bisections(gp, w, v));
  verify_bisection(gp, u, a, b, n);
  return u;
}

namespace {

Error hypotheses(const std::string& what) { return Error(ErrorCode::kHypothesesFailed, what); }

// A path whose cylinder lies inside the nonempty set c.
Path path_inside(const Graph& g, const Clopen& c) {
  const Piece p = c.pieces().front();
  if (p.punctures.empty()) return p.mu;
  std::set<Edge> avoid(p.punctures.begin(), p.punctures.end());
  for (uint32_t s : g.out_slots(p.mu.end)) {
    if (auto e = g.least_member(s, avoid)) return p.mu.extended(g, *e);
  }
  GGT_CHECK(false, "punctured piece without a free edge");
  return p.mu;
}

Clopen cylinder(const GraphPtr& g, const Path& p) { return Clopen::from_piece(g, Piece{p, {}}); }

}  // namespace

void check_path_families(const Graph& g, const PathFamilies& f, const Clopen& y, const Clopen& a,
                         const std::map<long, std::vector<VertexId>>& targets) {
  const GraphPtr& gp = y.graph();
  const Clopen outside = y - a;
  auto check_clause = [&](const std::vector<std::pair<Path, size_t>>& paths, const Clopen& inside,
                          const std::vector<VertexId>& ends, const char* name) {
    for (size_t i = 0; i < paths.size(); ++i) {
      const auto& [p, len] = paths[i];
      if (p.length() != len) throw hypotheses(std::string(name) + ": path of the wrong length");
      if (p.end != ends[i]) throw hypotheses(std::string(name) + ": path ends at the wrong vertex");
      if (!inside.contains(cylinder(gp, p))) throw hypotheses(std::string(name) + ": cylinder not contained");
      for (size_t j = 0; j < i; ++j) {
        if (!paths_disjoint(p, paths[j].first)) throw hypotheses(std::string(name) + ": paths overlap");
      }
    }
  };
  (void)g;
  std::vector<std::pair<Path, size_t>> c1, c2, c3;
  std::vector<VertexId> e1, e2, e3;
  for (const auto& [key, p] : f.gamma0) {
    c1.push_back({p, f.N});
    e1.push_back(targets.at(key.first).at(key.second));
  }
  for (const auto& [key, p] : f.gammaP) {
    c2.push_back({p, f.N + static_cast<size_t>(std::get<2>(key))});
    e2.push_back(targets.at(std::get<0>(key)).at(std::get<1>(key)));
  }
  for (const auto& [key, p] : f.gammaQ) {
    c3.push_back({p, f.N - static_cast<size_t>(std::get<2>(key))});
    e3.push_back(targets.at(std::get<0>(key)).at(std::get<1>(key)));
  }
  check_clause(c1, outside, e1, "gamma0");
  check_clause(c2, a, e2, "gammaP");
  check_clause(c3, a, e3, "gammaQ");
}

PathFamilies construct_disjoint_paths(const GraphPtr& gp, const Clopen& y, const Clopen& a,
                                      const std::set<long>& P, const std::set<long>& Q,
                                      const std::map<long, std::vector<VertexId>>& targets) {
  const Graph& g = *gp;
  const CriteriaReport crit = validate(g);
  if (!crit.lemma81_hypotheses) {
    throw hypotheses("the graph needs a strongly connected infinite emitter with a loop family "
                     "and an edge to every vertex");
  }
  if (a.is_empty()) throw hypotheses("the set A is empty");
  if (!y.contains(a) || y == a) throw hypotheses("A must be a proper subset of Y");
  for (long p : P) {
    if (p <= 0) throw Error(ErrorCode::kInvalidArgument, "P must hold positive integers");
  }
  for (long q : Q) {
    if (q >= 0) throw Error(ErrorCode::kInvalidArgument, "Q must hold negative integers");
  }
  for (const auto& [k, vs] : targets) {
    if (k != 0 && !P.count(k) && !Q.count(k)) {
      throw Error(ErrorCode::kInvalidArgument, "target index " + std::to_string(k) + " is not in Q, 0 or P");
    }
  }
  const VertexId w = *crit.lemma81_emitter;
  const uint32_t loops = *crit.lemma81_loop_family;

  Path mu = path_inside(g, y - a);
  Path mu2 = path_inside(g, a);
  mu = mu.concat(*find_path(g, mu.end, w));
  mu2 = mu2.concat(*find_path(g, mu2.end, w));
  const Edge pad = *g.least_member(loops);
  while (mu.length() < mu2.length()) mu = mu.extended(g, pad);
  while (mu2.length() < mu.length()) mu2 = mu2.extended(g, pad);

  const size_t M = mu.length();
  size_t K = 0;
  for (long q : Q) K = std::max(K, static_cast<size_t>(-q));
  PathFamilies out;
  out.N = M + K + 2;

  // Distinct loops e(k,i), then connectors f(k,i) avoiding all of them.
  std::map<std::pair<long, size_t>, Edge> e, f;
  std::set<Edge> used;
  for (const auto& [k, vs] : targets) {
    for (size_t i = 0; i < vs.size(); ++i) {
      const Edge loop = *g.least_member(loops, used);
      used.insert(loop);
      e[{k, i}] = loop;
    }
  }
  for (const auto& [k, vs] : targets) {
    for (size_t i = 0; i < vs.size(); ++i) {
      auto conn = g.least_edge(w, vs[i], used);
      if (!conn) throw hypotheses("no connector edge from " + g.vertex_name(w) + " to " + g.vertex_name(vs[i]));
      f[{k, i}] = *conn;
    }
  }
  auto build = [&](const Path& start, const Edge& loop, size_t reps, const Edge& last) {
    Path p = start;
    for (size_t r = 0; r < reps; ++r) p = p.extended(g, loop);
    return p.extended(g, last);
  };
  for (const auto& [k, vs] : targets) {
    for (size_t i = 0; i < vs.size(); ++i) {
      const Edge ek = e[{k, i}], fk = f[{k, i}];
      out.gamma0[{k, i}] = build(mu, ek, K + 1, fk);
      if (k > 0) {
        for (long j = 1; j <= k; ++j) out.gammaP[{k, i, j}] = build(mu2, ek, K + 1 + j, fk);
      } else if (k < 0) {
        for (long l = 1; l <= -k; ++l) out.gammaQ[{k, i, l}] = build(mu2, ek, K + 1 - l, fk);
      }
    }
  }
  check_path_families(g, out, y, a, targets);
  return out;
}

namespace {

// x as a subset of the source of b.
bool piece_within(const Graph& g, const Piece& x, const Piece& src) {
  if (!src.mu.is_prefix_of(x.mu)) return false;
  if (x.mu.length() > src.mu.length()) {
    const Edge next = x.mu.edges[src.mu.length()];
    return !std::binary_search(src.punctures.begin(), src.punctures.end(), next);
  }
  (void)g;
  return std::includes(x.punctures.begin(), x.punctures.end(), src.punctures.begin(),
                       src.punctures.end());
}

Piece piece_image(const Graph& g, const Block& b, const Piece& x) {
  return Piece{b.mu.concat(x.mu.suffix_from(b.nu.length(), g)), x.punctures};
}

std::vector<Piece> overlay(const Graph& g, const std::vector<Piece>& xs, const std::vector<Piece>& ys) {
  std::vector<Piece> out;
  for (const Piece& x : xs) {
    for (const Piece& y : ys) {
      auto z = intersect_pieces(g, x, y);
      if (z && !piece_empty(g, *z)) push_normalized(g, *z, out);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

const Block& block_over(const Graph& g, const std::vector<Block>& blocks, const Piece& x) {
  for (const Block& b : blocks) {
    if (piece_within(g, x, b.source())) return b;
  }
  GGT_CHECK(false, "piece outside every block source");
  return blocks.front();
}

}  // namespace

Factorization af_factor(const Element& e) {
  const GraphPtr& gp = e.graph();
  const Graph& g = *gp;
  Factorization out;
  size_t depth = 0;
  std::vector<Piece> sources, ranges;
  for (const Block& b : e.blocks()) {
    if (b.lag() != 0) throw Error(ErrorCode::kInvalidArgument, "af_factor needs an element without lag");
    depth = std::max(depth, b.mu.length());
    push_normalized(g, b.source(), sources);
    push_normalized(g, b.range(), ranges);
  }
  const Element inv = inverse(e);
  std::vector<Piece> part = overlay(g, sources, ranges);
  // Refine until e permutes the pieces. With lag 0 every piece stays within
  // the table depth, so there are finitely many candidates.
  while (true) {
    std::vector<Piece> img, pre;
    for (const Piece& x : part) {
      GGT_CHECK(x.mu.length() <= depth, "refinement exceeded the table depth");
      img.push_back(piece_image(g, block_over(g, e.blocks(), x), x));
      pre.push_back(piece_image(g, block_over(g, inv.blocks(), x), x));
    }
    std::vector<Piece> next = overlay(g, overlay(g, part, img), pre);
    if (next.size() == part.size()) break;
    part = std::move(next);
  }
  std::map<Piece, size_t> index_of;
  for (size_t i = 0; i < part.size(); ++i) index_of[part[i]] = i;
  std::vector<size_t> perm(part.size());
  for (size_t i = 0; i < part.size(); ++i) {
    const Block& b = block_over(g, e.blocks(), part[i]);
    const Piece y = piece_image(g, b, part[i]);
    auto it = index_of.find(y);
    if (it == index_of.end()) {
      const Clopen yc = Clopen::from_piece(gp, y);
      for (size_t j = 0; j < part.size(); ++j) {
        if (Clopen::from_piece(gp, part[j]) == yc) it = index_of.find(part[j]);
      }
    }
    GGT_CHECK(it != index_of.end(), "image of a piece is not a piece");
    perm[i] = it->second;
  }
  // On a cycle x0 -> x1 -> ... -> x(m-1) the element is i -> i + 1, the
  // product of the reflections i -> 1 - i and i -> -i. The pieces of a cycle
  // share range vertex and punctures, so every exchange between them is a
  // canonical arrow, and each reflection over all cycles is one transposition.
  Bisection outer, inner;
  std::vector<bool> seen(part.size(), false);
  for (size_t start = 0; start < part.size(); ++start) {
    if (seen[start]) continue;
    std::vector<size_t> cycle;
    for (size_t i = start; !seen[i]; i = perm[i]) {
      seen[i] = true;
      cycle.push_back(i);
    }
    const size_t m = cycle.size();
    auto reflect = [&](size_t c, Bisection& w) {
      for (size_t i = 0; i < m; ++i) {
        const size_t j = (c + m - i) % m;
        if (i >= j) continue;
        const Piece& x = part[cycle[i]];
        w.push_back(Block{part[cycle[j]].mu, x.punctures, x.mu});
      }
    };
    reflect(1, outer);
    reflect(0, inner);
  }
  for (const Bisection* w : {&outer, &inner}) {
    if (!w->empty()) out.transpositions.push_back(transposition(gp, *w));
  }
  out.certified = verify_product(e, out.transpositions);
  return out;
}

bool verify_product(const Element& e, const std::vector<Element>& fs) {
  for (const Element& f : fs) {
    if (*f.graph() != *e.graph()) return false;
  }
  return compose_all(e.graph(), fs) == e;
}

Factorization factor(const ClassContext& ctx, const Element& e, size_t max_depth) {
  const GraphPtr& gp = ctx.graph();
  const Graph& g = *gp;
  GGT_CHECK(*e.graph() == g, "element over another graph");
  if (!validate(g).lemma81_hypotheses) {
    throw hypotheses("factoring needs a strongly connected graph with an infinite emitter that "
                     "carries a loop family and has an edge to every vertex");
  }
  Factorization out;
  if (e.is_identity()) {
    out.certified = true;
    return out;
  }
  if (!index(ctx, e).zero) throw Error(ErrorCode::kIndexNonzero, "the element has nonzero index");
  const Clopen everything = Clopen::full(gp);
  Element alpha = e;
  if (support(alpha) == everything) {
    ShrinkResult s = shrink_support(alpha);
    out.transpositions.push_back(s.tau);
    alpha = s.e2;
    if (alpha.is_identity()) {
      out.certified = verify_product(e, out.transpositions);
      return out;
    }
  }
  const Clopen A = support(alpha);
  const GradedPartition sa = graded_partition(alpha);
  std::set<long> P, Q;
  for (const auto& [k, s] : sa.parts) {
    if (k > 0) P.insert(k);
    if (k < 0) Q.insert(k);
  }
  GGT_CHECK(P.empty() == Q.empty(), "lags of one sign only");
  auto append = [&](const Factorization& f) {
    for (const Element& t : f.transpositions) out.transpositions.push_back(t);
  };
  if (P.empty()) {
    append(af_factor(alpha));
    out.certified = verify_product(e, out.transpositions);
    return out;
  }

  // Pieces of S(0) n A and of S(k), k != 0.
  std::map<long, std::vector<Piece>> mu;
  std::map<long, std::vector<VertexId>> targets;
  for (const auto& [k, s] : sa.parts) {
    const Clopen part = k == 0 ? (s & A) : s;
    if (part.is_empty()) continue;
    mu[k] = part.pieces();
    for (const Piece& p : mu[k]) targets[k].push_back(p.mu.base);
  }
  const PathFamilies fam = construct_disjoint_paths(gp, everything, A, P, Q, targets);
  auto prefixed = [&](const Path& gamma, const Piece& p) { return Piece{gamma.concat(p.mu), p.punctures}; };
  auto gamma_p = [&](long p, size_t i, long j) {
    return j == 0 ? fam.gamma0.at({p, i}) : fam.gammaP.at({p, i, j});
  };

  // tau_V exchanges A with B.
  Bisection v;
  for (const auto& [k, ps] : mu) {
    for (size_t i = 0; i < ps.size(); ++i) {
      v.push_back(Block{fam.gamma0.at({k, i}).concat(ps[i].mu), ps[i].punctures, ps[i].mu});
    }
  }
  const Element tau_v = transposition(gp, v);
  const Element beta = compose(tau_v, compose(alpha, tau_v));
  std::map<long, Clopen> s_beta;
  for (const auto& [k, ps] : mu) {
    std::vector<Piece> img;
    for (size_t i = 0; i < ps.size(); ++i) img.push_back(prefixed(fam.gamma0.at({k, i}), ps[i]));
    s_beta[k] = Clopen::from_pieces(gp, img);
  }
  {
    const GradedPartition sb = graded_partition(beta);
    for (long k : P) GGT_CHECK(sb.part(k) == s_beta[k], "graded part of beta");
    for (long k : Q) GGT_CHECK(sb.part(k) == s_beta[k], "graded part of beta");
  }

  // tau_+ cycles S_beta(p) -> D(p,p) -> ... -> D(p,1) -> S_beta(p).
  std::vector<Element> tau_plus;
  std::map<std::pair<long, long>, Clopen> d_sets;
  Clopen d = Clopen(gp);
  for (long p : P) {
    const auto& ps = mu.at(p);
    for (long j = 1; j <= p; ++j) {
      std::vector<Piece> dj;
      for (size_t i = 0; i < ps.size(); ++i) dj.push_back(prefixed(gamma_p(p, i, j), ps[i]));
      d_sets[{p, j}] = Clopen::from_pieces(gp, dj);
      if (j < p) d = d | d_sets[{p, j}];
    }
    d = d | s_beta[p];
    for (long j = p; j >= 1; --j) {
      Bisection wpj;
      for (size_t i = 0; i < ps.size(); ++i) {
        wpj.push_back(Block{gamma_p(p, i, j).concat(ps[i].mu), ps[i].punctures,
                            gamma_p(p, i, j - 1).concat(ps[i].mu)});
      }
      tau_plus.push_back(transposition(gp, wpj));
    }
  }

  // tau_- cycles S_beta(q) -> C(q,|q|) -> ... -> C(q,1) -> S_beta(q).
  std::map<std::pair<long, long>, Clopen> x_sets;
  Clopen x = Clopen(gp);
  for (long q : Q) {
    const auto& ps = mu.at(q);
    for (long l = 1; l <= -q; ++l) {
      std::vector<Piece> xl;
      for (size_t i = 0; i < ps.size(); ++i) xl.push_back(prefixed(fam.gammaQ.at({q, i, l}), ps[i]));
      x_sets[{q, l}] = Clopen::from_pieces(gp, xl);
      x = x | x_sets[{q, l}];
    }
  }
  const Bisection r = find_bisection(ctx, x, d, max_depth);
  std::vector<Element> tau_minus;
  for (long q : Q) {
    std::vector<Clopen> c(static_cast<size_t>(-q) + 1, Clopen(gp));
    for (long l = 1; l <= -q; ++l) c[l] = bisection_range(gp, restrict_bisection(gp, r, x_sets[{q, l}]));
    for (long l = -q; l >= 1; --l) {
      const Clopen& target = l == 1 ? s_beta[q] : c[l - 1];
      tau_minus.push_back(transposition(gp, graded_cancellation(ctx, c[l], target, 1, max_depth)));
    }
  }

  Element tau = compose(compose_all(gp, tau_minus), compose_all(gp, tau_plus));
  const Element kernel_part = compose(beta, inverse(tau));
  for (const Block& b : kernel_part.blocks()) GGT_CHECK(b.lag() == 0, "quotient leaves the kernel");

  // alpha = tau_V o kernel_part o tau_- o tau_+ o tau_V.
  out.transpositions.push_back(tau_v);
  append(af_factor(kernel_part));
  for (const Element& t : tau_minus) out.transpositions.push_back(t);
  for (const Element& t : tau_plus) out.transpositions.push_back(t);
  out.transpositions.push_back(tau_v);
  out.certified = verify_product(e, out.transpositions);
  return out;
}

}  // namespace ggt
