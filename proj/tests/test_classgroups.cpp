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

#include "doctest.h"
#include "fixtures.hpp"
#include "generators.hpp"
#include "ggt/classgroups.hpp"
#include "ggt/error.hpp"
#include "ggt/graphcore.hpp"
#include "ggt/text.hpp"
#include "naive_snf.hpp"

using namespace ggt;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInternal;
}

// Relation matrix built from edge counts, independent of the library's own.
IntMatrix naive_relations(const Graph& g) {
  std::vector<VertexId> regular;
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (g.is_regular(v)) regular.push_back(v);
  IntMatrix m(g.num_vertices(), regular.size());
  for (size_t j = 0; j < regular.size(); ++j) {
    for (VertexId u = 0; u < g.num_vertices(); ++u) {
      Int entry = (u == regular[j]) ? 1 : 0;
      entry -= static_cast<long>(*g.edge_count(regular[j], u));
      m.at(u, j) = entry;
    }
  }
  return m;
}

void check_against_naive(const Graph& g) {
  const HomologyReport r = homology(g);
  const IntMatrix m = naive_relations(g);
  const auto d = testing::invariant_factors(m);
  std::vector<Int> torsion;
  size_t rank = 0;
  for (const Int& x : d) {
    if (x != 0) ++rank;
    if (x > 1) torsion.push_back(x);
  }
  CHECK(r.h0_torsion == torsion);
  CHECK(r.h0_free_rank == g.num_vertices() - rank);
  CHECK(r.h1_rank == m.cols() - rank);
}

Element E(const GraphPtr& g, const std::string& body) {
  return parse_element(g, "element e over " + g->name() + "\n" + body).element;
}

GraphPtr fig3_core() { return move_s(*fixtures::fig3(), fixtures::fig3()->vertex("a")); }

}  // namespace

TEST_CASE("homology examples") {
  auto einf = homology(*fixtures::e_inf());
  CHECK(format_group(einf.h0_free_rank, einf.h0_torsion) == "Z^1");
  CHECK(einf.h1_rank == 0);
  auto f3 = homology(*fixtures::fig3());
  CHECK(format_group(f3.h0_free_rank, f3.h0_torsion) == "Z^2 + Z/3");
  CHECK(f3.h1_rank == 1);
  CHECK(f3.to_string(*fixtures::fig3()).find("H0 = Z^2 + Z/3\nH1 = Z^1\n") == 0);
  for (int n = 1; n <= 5; ++n) {
    auto c = homology(*fixtures::c_n(n));
    CHECK(c.h0_free_rank == 1);
    CHECK(c.h0_torsion.empty());
    CHECK(c.h1_rank == 1);
    check_against_naive(*fixtures::c_n(n));
  }
  for (int n = 2; n <= 6; ++n) {
    auto e = homology(*fixtures::e_n(n));
    CHECK(e.h0_free_rank == 0);
    CHECK(e.h1_rank == 0);
    if (n == 2) {
      CHECK(e.h0_torsion.empty());
      CHECK(format_group(e.h0_free_rank, e.h0_torsion) == "0");
    } else {
      REQUIRE(e.h0_torsion.size() == 1);
      CHECK(e.h0_torsion[0] == n - 1);
    }
    check_against_naive(*fixtures::e_n(n));
  }
}

TEST_CASE("homology of random finite graphs matches the naive oracle") {
  gen::Rng rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const size_t n = 1 + gen::below(rng, 4);
    std::vector<std::string> vs;
    for (size_t i = 0; i < n; ++i) vs.push_back("v" + std::to_string(i));
    std::vector<EdgeDecl> edges;
    const size_t m = gen::below(rng, 8);
    for (size_t i = 0; i < m; ++i)
      edges.push_back({"e" + std::to_string(i), vs[gen::below(rng, n)], vs[gen::below(rng, n)]});
    check_against_naive(*Graph::create("r", vs, edges, {}));
  }
}

TEST_CASE("tensor rank and abelianization notes") {
  auto e3 = homology(*fixtures::e_n(3));
  CHECK(e3.h0_tensor_z2_rank == 1);
  CHECK(homology(*fixtures::e_n(4)).h0_tensor_z2_rank == 0);
  CHECK(abelianization_report(*fixtures::e_inf()).abelianization_note ==
        "abelianization = Z^0 + (Z/2)^N, 0 <= N <= 1");
  CHECK(abelianization_report(*fixtures::fig3()).abelianization_note ==
        "abelianization = Z^1 + (Z/2)^N, 0 <= N <= 2");
  CHECK(abelianization_report(*fixtures::e_n(2)).abelianization_note == "abelianization = trivial");
  CHECK(code_of([] { abelianization_report(*fixtures::c_n(3)); }) == ErrorCode::kCriteriaFailed);
}

TEST_CASE("class_of examples") {
  auto e2 = fixtures::e_n(2);
  ClassContext c2(e2);
  CHECK(c2.class_of(parse_clopen(e2, "Z(a.a)")) == atom(0, 2));
  CHECK(c2.class_of(parse_clopen(e2, "Z(a) + Z(b)")) == atom(0, 0));
  CHECK(c2.class_of(make_piece(*e2, parse_path(*e2, "a"))) + atom(0, 1) ==
        c2.class_of(parse_clopen(e2, "Z(a)")) + c2.class_of(parse_clopen(e2, "Z(b)")));
  CHECK(c2.equal(atom(0, 1) + atom(0, 1), atom(0, 0)));
  auto einf = fixtures::e_inf();
  ClassContext ci(einf);
  CHECK(ci.class_of(parse_clopen(einf, "Z(@v \\ L#1)")) == atom(0, 0) - atom(0, 1));
  CHECK(format_class(*einf, atom(0, 0) - atom(0, 1)) == "(v,0):+1 (v,1):-1");
  CHECK(format_class(*einf, ClassVector{}) == "0");
  ClassContext cf(fixtures::fig3());
  CHECK(code_of([&] { cf.class_of(Clopen::full(fixtures::fig3())); }) == ErrorCode::kSourcePresent);
}

TEST_CASE("phi examples") {
  CHECK(phi(atom(0, 2), -1) == atom(0, 1));
  CHECK(code_of([] { phi(atom(0, 0), -1); }) == ErrorCode::kNegativeLevel);
  CHECK(phi(atom(0, 0, Grading::kSkew), -1) == atom(0, -1, Grading::kSkew));
  ClassVector c = atom(0, 1) - atom(0, 3);
  CHECK(phi(c, 0) == c);
}

TEST_CASE("is_zero examples") {
  ClassContext e2(fixtures::e_n(2));
  ClassVector c = atom(0, 0);
  c.add(0, 1, -2);
  CHECK(e2.is_zero(c));
  CHECK(e2.is_zero(ClassVector{}));
  // H0 of E_2 is trivial but the AF kernel is not: single atoms survive.
  CHECK_FALSE(e2.is_zero(atom(0, 3)));
  auto f3 = fixtures::fig3();
  ClassContext cf(f3);
  CHECK_FALSE(cf.is_zero(atom(f3->vertex("c"), 0)));
  CHECK_FALSE(cf.is_zero(atom(f3->vertex("c"), 0) - atom(f3->vertex("c"), 1)));
  // Skew levels may be negative.
  ClassContext ci(fixtures::e_inf());
  CHECK_FALSE(ci.is_zero(atom(0, -2, Grading::kSkew)));
  ClassContext e3(fixtures::e_n(3));
  ClassVector s = atom(0, -4, Grading::kSkew);
  s.add(0, -3, -3);
  CHECK(e3.is_zero(s));
}

TEST_CASE("relation soundness") {
  for (const GraphPtr& g : {fixtures::e_n(2), fixtures::e_n(3), fixtures::e_inf(), fixtures::fig3(),
                            fixtures::c_n(3), fig3_core()}) {
    ClassContext ctx(g);
    for (VertexId v = 0; v < g->num_vertices(); ++v) {
      for (long n = 0; n <= 3; ++n) {
        if (g->is_regular(v)) {
          ClassVector c = atom(v, n);
          for (uint32_t s : g->out_slots(v)) c.add(g->slot(s).range, n + 1, -1);
          CHECK(ctx.is_zero(c));
        } else {
          CHECK_FALSE(ctx.is_zero(atom(v, n)));
        }
      }
    }
  }
}

TEST_CASE("nonempty sets have nonzero classes") {
  gen::Rng rng(4);
  for (const GraphPtr& g : {fixtures::e_n(2), fixtures::e_inf(), fig3_core(), fixtures::c_n(2)}) {
    ClassContext ctx(g);
    for (int i = 0; i < 40; ++i) {
      Clopen a = gen::random_clopen(g, rng);
      CHECK_FALSE(ctx.is_zero(ctx.class_of(a)));
      // Refining keeps the class.
      CHECK(ctx.equal(ctx.class_of(a), ctx.class_of(Clopen::from_pieces(g, refine_to(a, 3)))));
      ClassVector sum;
      for (const Piece& p : refine_to(a, 3)) sum = sum + ctx.class_of(p);
      CHECK(ctx.equal(sum, ctx.class_of(a)));
    }
  }
}

TEST_CASE("phi naturality on lag-one bisections") {
  gen::Rng rng(12);
  for (const GraphPtr& g : {fixtures::e_n(2), fixtures::e_inf(), fig3_core()}) {
    ClassContext ctx(g);
    for (int i = 0; i < 40; ++i) {
      Piece src = gen::random_piece(*g, rng);
      auto mu = gen::random_path_into(*g, rng, src.mu.end, src.mu.length() + 1);
      REQUIRE(mu);
      // Range one edge longer than the source.
      Block b{*mu, src.punctures, src.mu};
      CHECK(b.lag() == 1);
      CHECK(ctx.class_of(b.range()) == phi(ctx.class_of(b.source()), 1));
    }
  }
}

TEST_CASE("index examples") {
  auto e2 = fixtures::e_n(2);
  ClassContext c2(e2);
  CHECK(index(c2, Element::identity(e2)).zero);
  Element a0 = E(e2, "block a | - | a.a\nblock b.a | - | a.b\nblock b.b | - | b\n");
  auto r = index(c2, a0);
  CHECK(r.zero);
  CHECK(r.c == phi(atom(0, 2), -1) - atom(0, 1));
  CHECK(code_of([] {
          ClassContext cf(fixtures::fig3());
          index(cf, Element::identity(fixtures::fig3()));
        }) == ErrorCode::kNotEssential);
  gen::Rng rng(3);
  for (const GraphPtr& g : {fixtures::e_inf(), fixtures::e_n(2)}) {
    ClassContext ctx(g);
    for (int i = 0; i < 50; ++i) CHECK(index(ctx, gen::random_transposition(g, rng, i % 2 == 0)).zero);
  }
}

TEST_CASE("index is a homomorphism into ker(id - phi)") {
  gen::Rng rng(9);
  for (const GraphPtr& g : {fixtures::e_inf(), fixtures::e_n(2), fixtures::c_n(2), fig3_core()}) {
    ClassContext ctx(g);
    for (int i = 0; i < 30; ++i) {
      Element f = gen::random_element(g, rng, 5, 5);
      Element h = gen::random_element(g, rng, 5, 5);
      auto rf = index(ctx, f), rh = index(ctx, h), rfh = index(ctx, compose(f, h));
      CHECK(ctx.is_zero(rfh.c - rf.c - rh.c));
      CHECK(ctx.is_zero(rf.c - phi(rf.c, 1)));
      CHECK(ctx.is_zero(index(ctx, inverse(f)).c + rf.c));
      if (g->name() != fig3_core()->name()) CHECK(rf.zero);
    }
  }
}

TEST_CASE("an element with nonzero index") {
  auto g = fig3_core();
  ClassContext ctx(g);
  const VertexId b = g->vertex("b"), d = g->vertex("d");
  // Z(b) moves one level down and Z(dd1) one level up; the rest is matched
  // without lag.
  Element shift = E(g,
                    "block bb | - | @b\nblock @d | - | dd1\n"
                    "block bd1 | - | dd2\nblock bd2 | - | dd3\nblock bd3 | - | dd4\n"
                    "block bc1 | - | dc1\nblock bc2 | - | dc2\nblock bc3 | - | dc3\n");
  auto r = index(ctx, shift);
  CHECK_FALSE(r.zero);
  CHECK(ctx.equal(r.c, atom(d, 0) - atom(b, 0)));
  CHECK(ctx.equal(r.c, atom(d, 3) - atom(b, 3)));
  CHECK(ctx.is_zero(r.c - phi(r.c, 1)));
  auto r2 = index(ctx, compose(shift, shift));
  CHECK(ctx.equal(r2.c, r.c + r.c));
  CHECK(index(ctx, compose(shift, inverse(shift))).zero);
  gen::Rng rng(21);
  for (int i = 0; i < 10; ++i) {
    Element t = gen::random_transposition(g, rng, false);
    CHECK(ctx.equal(index(ctx, compose(t, compose(shift, t))).c, r.c));
  }
}
