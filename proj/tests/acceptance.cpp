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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 when any
// criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "generators.hpp"
#include "ggt/classgroups.hpp"
#include "ggt/error.hpp"
#include "ggt/factor.hpp"
#include "ggt/graphcore.hpp"
#include "ggt/text.hpp"
#include "naive_snf.hpp"

using namespace ggt;

namespace {

// Collects failed checks with a short reason; the first few are printed.
struct Tally {
  size_t checks = 0;
  size_t failed = 0;
  std::string first_failure;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (failed++ == 0) first_failure = what;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool report(int n, const std::string& title, const std::function<void(Tally&)>& body,
            double limit_seconds) {
  Tally t;
  const auto t0 = Clock::now();
  try {
    body(t);
  } catch (const std::exception& e) {
    t.expect(false, std::string("exception: ") + e.what());
  }
  const double elapsed = seconds_since(t0);
  if (elapsed > limit_seconds) {
    t.expect(false, "took " + std::to_string(elapsed) + " s, limit " + std::to_string(limit_seconds) + " s");
  }
  std::ostringstream line;
  line << (t.failed == 0 ? "PASS" : "FAIL") << " criterion " << n << ": " << title << " ("
       << t.checks << " checks, " << t.failed << " failed, " << std::fixed;
  line.precision(2);
  line << elapsed << " s)";
  if (t.failed > 0) line << " first failure: " << t.first_failure;
  std::cout << line.str() << std::endl;
  return t.failed == 0;
}

GraphPtr fig3_core() { return move_s(*fixtures::fig3(), fixtures::fig3()->vertex("a")); }

// Homology against the stated groups and an independent Smith form of the
// relation matrix.
void homology_fixtures(Tally& t) {
  auto expect_groups = [&](const GraphPtr& g, const std::string& h0, const std::string& h1) {
    const auto t0 = Clock::now();
    const HomologyReport r = homology(*g);
    t.expect(format_group(r.h0_free_rank, r.h0_torsion) == h0, g->name() + " H0");
    t.expect(format_group(r.h1_rank, {}) == h1, g->name() + " H1");
    // Naive oracle: invariant factors of the relation matrix from edge counts.
    std::vector<VertexId> regular;
    for (VertexId v = 0; v < g->num_vertices(); ++v)
      if (g->is_regular(v)) regular.push_back(v);
    IntMatrix m(g->num_vertices(), regular.size());
    for (size_t j = 0; j < regular.size(); ++j) {
      for (VertexId u = 0; u < g->num_vertices(); ++u) {
        Int entry = u == regular[j] ? 1 : 0;
        entry -= static_cast<long>(*g->edge_count(regular[j], u));
        m.at(u, j) = entry;
      }
    }
    size_t rank = 0;
    std::vector<Int> torsion;
    for (const Int& d : testing::invariant_factors(m)) {
      if (d != 0) ++rank;
      if (d > 1) torsion.push_back(d);
    }
    t.expect(r.h0_torsion == torsion && r.h0_free_rank == g->num_vertices() - rank,
             g->name() + " H0 vs naive Smith form");
    t.expect(r.h1_rank == regular.size() - rank, g->name() + " H1 vs naive rank");
    t.expect(seconds_since(t0) < 1.0, g->name() + " took over 1 s");
  };
  expect_groups(fixtures::e_inf(), "Z^1", "0");
  expect_groups(fixtures::fig3(), "Z^2 + Z/3", "Z^1");
  for (int n = 1; n <= 5; ++n) expect_groups(fixtures::c_n(n), "Z^1", "Z^1");
  for (int n = 2; n <= 6; ++n) {
    expect_groups(fixtures::e_n(n), n == 2 ? "0" : "Z/" + std::to_string(n - 1), "0");
  }
}

void index_suite(Tally& t) {
  gen::Rng rng(20260101);
  auto in_kernel = [&](const ClassContext& ctx, const IndexResult& r) {
    return ctx.is_zero(r.c - phi(r.c, 1));
  };
  // Random transpositions.
  for (const GraphPtr& g : {fixtures::e_inf(), fixtures::e_n(2)}) {
    const ClassContext ctx(g);
    for (int i = 0; i < 100; ++i) {
      const Element tau = gen::random_transposition(g, rng, i % 2 == 0);
      const IndexResult r = index(ctx, tau);
      t.expect(r.zero, g->name() + " transposition " + format_element("t", tau));
      t.expect(in_kernel(ctx, r), "index outside ker(id - phi)");
    }
  }
  // Additivity on 100 random pairs, including graphs with nonzero indices.
  const std::vector<GraphPtr> graphs{fixtures::e_inf(), fixtures::e_n(2), fig3_core(),
                                     fixtures::c_n(2)};
  for (int i = 0; i < 100; ++i) {
    const GraphPtr& g = graphs[i % graphs.size()];
    const ClassContext ctx(g);
    const Element a = gen::random_element(g, rng, 6, 4);
    const Element b = gen::random_element(g, rng, 6, 4);
    const IndexResult ra = index(ctx, a), rb = index(ctx, b), rab = index(ctx, compose(a, b));
    t.expect(ctx.equal(rab.c, ra.c + rb.c), g->name() + " additivity");
    for (const IndexResult* r : {&ra, &rb, &rab}) t.expect(in_kernel(ctx, *r), "index outside ker(id - phi)");
  }
  // Elements over C_2 form a finite group.
  const GraphPtr c2 = fixtures::c_n(2);
  const ClassContext ctx(c2);
  for (int i = 0; i < 50; ++i) {
    const IndexResult r = index(ctx, gen::random_element(c2, rng, 6, 6));
    t.expect(r.zero, "nonzero index over C_2");
  }
  // A known nonzero value: the shift moves one level of mass from x to y.
  const GraphPtr twin = parse_graph(
      "graph twin\nvertex w\nvertex x\nvertex y\nedge wx w x\nedge wy w y\nedge xw x w\n"
      "edge xx x x\nedge yw y w\nedge yy y y\niedges L w w\n",
      "twin");
  const ClassContext cc(twin);
  const Element e =
      parse_element(twin, "element shift over twin\nblock xx | - | @x\nblock @y | - | yy\nblock xw | - | yw\n")
          .element;
  const IndexResult r = index(cc, e);
  t.expect(!r.zero, "shift should have nonzero index");
  t.expect(cc.equal(r.c, atom(twin->vertex("y"), 0) - atom(twin->vertex("x"), 0)), "shift index value");
  t.expect(ctx.is_zero(ClassVector{}), "zero vector");
  t.expect(in_kernel(cc, r), "index outside ker(id - phi)");
}

void graded_partition_suite(Tally& t) {
  gen::Rng rng(7);
  // alpha(S_alpha(k)) = S_{alpha^-1}(-k).
  const std::vector<GraphPtr> graphs{fixtures::e_n(2), fixtures::e_inf(), fixtures::fig3()};
  for (int i = 0; i < 100; ++i) {
    const GraphPtr& g = graphs[i % graphs.size()];
    const Element a = gen::random_element(g, rng, 6, 6);
    const GradedPartition gp = graded_partition(a), gi = graded_partition(inverse(a));
    Clopen all(g);
    for (const auto& [k, s] : gp.parts) {
      t.expect(image(a, s) == gi.part(-k), "alpha(S(k)) != S_inv(-k)");
      t.expect(!all.intersects(s), "graded parts overlap");
      all = all | s;
    }
    t.expect(all == Clopen::full(g), "graded parts do not cover");
  }
  // S_{tau alpha tau}(k) = tau(S_alpha(k)) for tau built from a constant-lag
  // bisection with source supp(alpha).
  int done = 0;
  for (int i = 0; done < 100 && i < 1000; ++i) {
    const GraphPtr g = i % 2 ? fixtures::e_n(2) : fixtures::e_inf();
    const Graph& gr = *g;
    const Element a0 = gen::random_element(g, rng, 5, 5);
    if (a0.is_identity()) continue;
    const Path p = parse_path(gr, gr.num_slots() == 2 ? "a" : "L#1");
    const Path q = parse_path(gr, gr.num_slots() == 2 ? (i % 4 < 2 ? "b" : "b.b")
                                                      : (i % 4 < 2 ? "L#2" : "L#2.L#3"));
    const Element a = gen::embed(a0, p);
    Bisection v;
    const Clopen supp = support(a);
    for (const Piece& piece : supp.pieces()) {
      v.push_back(Block{q.concat(piece.mu.suffix_from(p.length(), gr)), piece.punctures, piece.mu});
    }
    const Element tau = transposition(g, v);
    const Element conj = compose(tau, compose(a, tau));
    t.expect(support(conj) == bisection_range(g, v), "support of the conjugate");
    const GradedPartition ga = graded_partition(a), gc = graded_partition(conj);
    for (const auto& [k, s] : ga.parts) t.expect(gc.part(k) == image(tau, s), "S_conj(k) != tau(S(k))");
    for (const auto& [k, s] : gc.parts) t.expect(ga.parts.count(k) == 1, "extra graded part");
    ++done;
  }
  t.expect(done == 100, "conjugation instances");
  // Equal graded partitions give a lag-free quotient: b = k o a with k in the
  // kernel has the graded partition of a.
  for (int i = 0; i < 50; ++i) {
    const GraphPtr& g = graphs[i % 2];
    const Element a = gen::random_element(g, rng, 6, 6);
    const Element k = gen::random_element(g, rng, 6, 6, 3, true);
    const Element b = compose(k, a);
    t.expect(graded_partition(b).parts == graded_partition(a).parts, "constructed pair partitions");
    const Element q = compose(b, inverse(a));
    for (const Block& blk : q.blocks()) t.expect(blk.lag() == 0, "quotient block with lag");
  }
}

void cancellation_suite(Tally& t) {
  gen::Rng rng(314);
  int pairs = 0;
  for (const GraphPtr& g : {fixtures::e_inf(), fixtures::e_n(2)}) {
    const ClassContext ctx(g);
    for (int i = 0; i < 50; ++i) {
      // A common seed moved by two kernel elements, each a product of
      // canonical prefix exchanges.
      const Clopen seed = gen::random_clopen(g, rng);
      if (seed.is_empty()) {
        --i;
        continue;
      }
      const Clopen a = image(gen::random_element(g, rng, 8, 6, 3, true), seed);
      const Clopen b = image(gen::random_element(g, rng, 8, 6, 3, true), seed);
      t.expect(ctx.equal(ctx.class_of(a), ctx.class_of(b)), "generated pair with unequal classes");
      const Bisection w = find_bisection(ctx, a, b);
      t.expect(bisection_source(g, w) == a && bisection_range(g, w) == b, "bisection source/range");
      for (const Block& blk : w) t.expect(blk.lag() == 0, "bisection with lag");
      t.expect(!ctx.is_zero(ctx.class_of(a)), "nonempty set with zero class");
      ++pairs;
    }
  }
  t.expect(pairs == 100, "pair count");
}

void factorization_suite(Tally& t) {
  gen::Rng rng(2718);
  const GraphPtr einf = fixtures::e_inf();
  const ClassContext ctx(einf);
  auto check = [&](const Element& e, const Factorization& f, const std::string& what) {
    t.expect(f.certified, what + " not certified");
    Element product = Element::identity(e.graph());
    for (const Element& tau : f.transpositions) {
      t.expect(compose(tau, tau).is_identity() && !tau.is_identity(), what + " factor is not an involution");
      product = compose(product, tau);
    }
    t.expect(product == e, what + " recomposition differs");
  };
  for (int i = 0; i < 50; ++i) {
    Element e = Element::identity(einf);
    const size_t nt = gen::below(rng, 7), nk = gen::below(rng, 3);
    for (size_t j = 0; j < nt; ++j) e = compose(e, gen::random_transposition(einf, rng, false));
    for (size_t j = 0; j < nk; ++j) e = compose(e, gen::random_element(einf, rng, 6, 4, 3, true));
    t.expect(index(ctx, e).zero, "index of a generated element");
    check(e, factor(ctx, e), "E_inf element " + std::to_string(i));
  }
  const GraphPtr e2 = fixtures::e_n(2);
  for (int i = 0; i < 20; ++i) {
    Element e = gen::random_element(e2, rng, 8, 6, 3, true);
    e = compose(e, gen::random_transposition(e2, rng, true));
    check(e, af_factor(e), "E_2 kernel element " + std::to_string(i));
  }
}

void boolean_oracle(Tally& t) {
  gen::Rng rng(99);
  const std::vector<GraphPtr> graphs{fixtures::e_n(2), fixtures::e_inf(), fixtures::fig3(),
                                     fixtures::c_n(3)};
  int n = 0;
  for (const GraphPtr& g : graphs) {
    const auto points = gen::sample_points(*g, 4, 4);
    for (int i = 0; i < 125; ++i, ++n) {
      const auto expr = gen::random_expr(*g, rng, 3);
      const Clopen c = expr->eval(g);
      bool agree = true;
      for (const BoundaryPoint& x : points) agree = agree && c.member(x) == expr->holds(x);
      t.expect(agree, "membership mismatch on " + g->name() + " for " + format_clopen(c));
    }
  }
  t.expect(n == 500, "expression count");
}

void doubling_suite(Tally& t) {
  gen::Rng rng(1234);
  const std::vector<GraphPtr> graphs{fixtures::e_n(2), fixtures::e_inf(), fixtures::fig3(),
                                     fixtures::e_n(3), fig3_core()};
  for (int i = 0; i < 50; ++i) {
    const GraphPtr& g = graphs[i % graphs.size()];
    if (!validate(*g).ah_criteria) {
      t.expect(false, g->name() + " fails the AH criteria");
      continue;
    }
    const Clopen a = gen::random_clopen(g, rng);
    if (a.is_empty()) {
      --i;
      continue;
    }
    const auto [u, v] = doubling_bisections(g, a);
    const Clopen ru = bisection_range(g, u), rv = bisection_range(g, v);
    t.expect(bisection_source(g, u) == a && bisection_source(g, v) == a, "s(U) = s(V) = A");
    t.expect(!ru.intersects(rv), "r(U) and r(V) overlap");
    t.expect(a.contains(ru | rv), "r(U) + r(V) outside A");
  }
}

}  // namespace

int main() {
  bool ok = true;
  ok &= report(1, "homology fixtures", homology_fixtures, 30);
  ok &= report(2, "index suite", index_suite, 300);
  ok &= report(3, "graded-partition lemmas", graded_partition_suite, 300);
  ok &= report(4, "cancellation", cancellation_suite, 60);
  ok &= report(5, "factorization", factorization_suite, 300);
  ok &= report(6, "Boolean-algebra oracle", boolean_oracle, 300);
  ok &= report(7, "purely-infinite doubling", doubling_suite, 300);
  return ok ? 0 : 1;
}
