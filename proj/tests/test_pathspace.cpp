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
#include "ggt/error.hpp"
#include "ggt/pathspace.hpp"
#include "ggt/text.hpp"

using namespace ggt;

namespace {

Clopen C(const GraphPtr& g, const char* text) { return parse_clopen(g, text); }
std::string S(const Clopen& c) { return format_clopen(c); }
BoundaryPoint P(const GraphPtr& g, const char* text) { return parse_point(*g, text); }

}  // namespace

TEST_CASE("intersect examples") {
  auto e2 = fixtures::e_n(2);
  CHECK(intersect(C(e2, "Z(a)"), C(e2, "Z(b)")).is_empty());
  CHECK(intersect(C(e2, "Z(@v \\ a)"), C(e2, "Z(a.b)")).is_empty());
  CHECK(S(intersect(C(e2, "Z(@v \\ a)"), C(e2, "Z(b.a)"))) == "Z(b.a)");
}

TEST_CASE("subtract examples") {
  auto einf = fixtures::e_inf();
  auto e2 = fixtures::e_n(2);
  CHECK(S(subtract(C(einf, "Z(@v)"), C(einf, "Z(L#3)"))) == "Z(@v \\ L#3)");
  CHECK(subtract(C(e2, "Z(@v)"), C(e2, "Z(a) + Z(b)")).is_empty());
  CHECK(S(subtract(C(e2, "Z(a)"), C(e2, "Z(a.a)"))) == "Z(a.b)");
}

TEST_CASE("is_empty and equal examples") {
  auto einf = fixtures::e_inf();
  auto e2 = fixtures::e_n(2);
  CHECK(is_empty(C(e2, "Z(@v \\ a,b)")));
  CHECK_FALSE(is_empty(C(einf, "Z(@v \\ L#1)")));
  CHECK(equal(C(e2, "Z(@v)"), C(e2, "Z(a) + Z(b)")));
  CHECK(C(e2, "Z(@v)") == C(e2, "Z(a) + Z(b)"));
}

TEST_CASE("canonical forms merge siblings and punctures") {
  auto einf = fixtures::e_inf();
  CHECK(S(C(einf, "Z(@v \\ L#1,L#2) + Z(L#2)")) == "Z(@v \\ L#1)");
  CHECK(S(C(einf, "Z(@v \\ L#1) + Z(L#1)")) == "Z(@v)");
  auto e2 = fixtures::e_n(2);
  CHECK(S(C(e2, "Z(a.a) + Z(a.b) + Z(b)")) == "Z(@v)");
  CHECK(S(C(e2, "Z(@v \\ a)")) == "Z(b)");
  auto c2 = fixtures::c_n(2);
  CHECK(S(C(c2, "Z(x)")) == "Z(@u)");
  CHECK(S(Clopen(einf)) == "0");
}

TEST_CASE("refine_to examples") {
  auto e2 = fixtures::e_n(2);
  CHECK(format_pieces(*e2, refine_to(C(e2, "Z(@v)"), 2)) ==
        "Z(a.a) + Z(a.b) + Z(b.a) + Z(b.b)");
  auto einf = fixtures::e_inf();
  CHECK(format_pieces(*einf, refine_to(C(einf, "Z(@v)"), 1)) == "Z(@v)");
  auto c2 = fixtures::c_n(2);
  auto x = make_piece(*c2, parse_path(*c2, "x"));
  auto r = refine_to(Clopen::from_piece(c2, x), 2);
  CHECK(format_pieces(*c2, r) == "Z(x.y)");
}

TEST_CASE("member examples") {
  auto e2 = fixtures::e_n(2);
  CHECK(member(P(e2, "@v(a)"), C(e2, "Z(a.a)")));
  auto einf = fixtures::e_inf();
  CHECK_FALSE(member(P(einf, "L#1"), C(einf, "Z(@v \\ L#1)")));
  CHECK(member(P(einf, "@v"), C(einf, "Z(@v \\ L#1)")));
}

TEST_CASE("boundary points normalize") {
  auto e2 = fixtures::e_n(2);
  CHECK(P(e2, "a.a(a.a)") == P(e2, "@v(a)"));
  CHECK(P(e2, "b.a(b.a)") == P(e2, "@v(b.a)"));
  CHECK(format_point(*e2, P(e2, "a.b.a(b.a)")) == "@v(a.b)");
  CHECK(format_point(*e2, P(e2, "b.b.a(a)")) == "b.b(a)");
  CHECK_THROWS_AS(P(e2, "a"), Error);  // regular end without a tail
}

TEST_CASE("singleton pieces") {
  auto c2 = fixtures::c_n(2);
  auto p = singleton_point(*c2, make_piece(*c2, parse_path(*c2, "x")));
  REQUIRE(p);
  CHECK(*p == P(c2, "x(y.x)"));
  auto e2 = fixtures::e_n(2);
  CHECK_FALSE(singleton_point(*e2, make_piece(*e2, parse_path(*e2, "a"))));
  auto einf = fixtures::e_inf();
  CHECK_FALSE(singleton_point(*einf, make_piece(*einf, parse_path(*einf, "@v"))));
  auto sink = Graph::create("s", {"p", "q"}, {{"x", "p", "q"}}, {});
  auto q = singleton_point(*sink, make_piece(*sink, parse_path(*sink, "@p")));
  REQUIRE(q);
  CHECK(q->finite());
  CHECK(q->prefix.length() == 1);
}

TEST_CASE("boolean algebra agrees with point enumeration") {
  gen::Rng rng(2024);
  for (const GraphPtr& g : {fixtures::e_n(2), fixtures::e_inf(), fixtures::c_n(2), fixtures::fig3()}) {
    const auto points = gen::sample_points(*g, g->name() == "fig3" ? 3 : 4, 4);
    for (int trial = 0; trial < 60; ++trial) {
      auto expr = gen::random_expr(*g, rng, 3);
      const Clopen c = expr->eval(g);
      for (const BoundaryPoint& x : points) {
        if (c.member(x) != expr->holds(x)) {
          FAIL_CHECK("membership mismatch at " << format_point(*g, x) << " for " << S(c));
          break;
        }
      }
      // Canonical pieces are disjoint and describe the same set.
      const auto ps = c.pieces();
      for (size_t i = 0; i < ps.size(); ++i)
        for (size_t j = i + 1; j < ps.size(); ++j) CHECK_FALSE(intersect_pieces(*g, ps[i], ps[j]));
      for (const BoundaryPoint& x : points) {
        size_t hits = 0;
        for (const Piece& p : ps) hits += piece_contains(p, x);
        CHECK(hits == (c.member(x) ? 1u : 0u));
      }
      CHECK(Clopen::from_pieces(g, ps) == c);
      CHECK(parse_clopen(g, S(c)) == c);
      // Refinement keeps the set.
      CHECK(equal(Clopen::from_pieces(g, refine_to(c, 3)), c));
    }
  }
}

TEST_CASE("laws of the Boolean algebra") {
  gen::Rng rng(99);
  for (const GraphPtr& g : {fixtures::e_n(2), fixtures::e_inf(), fixtures::fig3()}) {
    for (int trial = 0; trial < 40; ++trial) {
      Clopen a = gen::random_clopen(g, rng), b = gen::random_clopen(g, rng),
             c = gen::random_clopen(g, rng);
      CHECK((a | b) == (b | a));
      CHECK((a & b) == (b & a));
      CHECK(((a | b) | c) == (a | (b | c)));
      CHECK(((a & b) & c) == (a & (b & c)));
      CHECK((a & (b | c)) == ((a & b) | (a & c)));
      CHECK((a | (b & c)) == ((a | b) & (a | c)));
      // De Morgan inside a bounding set.
      Clopen u = a | b | c;
      CHECK((u - (a | b)) == ((u - a) & (u - b)));
      CHECK((u - (a & b)) == ((u - a) | (u - b)));
      CHECK(a.complement().complement() == a);
      CHECK((a - b) == (a & b.complement()));
      // Structural and symmetric-difference equality agree.
      CHECK((a == b) == equal(a, b));
      Clopen a2 = Clopen::from_pieces(g, refine_to(a, 2));
      CHECK((a2 == a) == equal(a2, a));
      CHECK(a2 == a);
    }
  }
}

TEST_CASE("transplant moves a subset along a prefix exchange") {
  auto e2 = fixtures::e_n(2);
  Clopen x = C(e2, "Z(a.b) + Z(a.a.a)");
  CHECK(S(x.transplant(parse_path(*e2, "a"), parse_path(*e2, "b.b"))) == "Z(b.b.b) + Z(b.b.a.a)");
  auto einf = fixtures::e_inf();
  Clopen y = C(einf, "Z(L#1 \\ L#2)");
  CHECK(S(y.transplant(parse_path(*einf, "L#1"), parse_path(*einf, "@v"))) == "Z(@v \\ L#2)");
}

TEST_CASE("text round trips") {
  auto f3 = fixtures::fig3();
  auto again = parse_graph(format_graph(*f3), "other");
  CHECK(*again == *f3);
  auto g = parse_graph("# comment\nvertex v\niedges L v v  # trailing\n", "einf");
  CHECK(*g == *fixtures::e_inf());
  CHECK_THROWS_AS(parse_graph("vertex v\nedge e v\n", "x"), Error);
  gen::Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    Piece p = gen::random_piece(*f3, rng);
    CHECK(parse_piece(*f3, format_piece(*f3, p)) == p);
    CHECK(parse_path(*f3, format_path(*f3, p.mu)) == p.mu);
  }
}
