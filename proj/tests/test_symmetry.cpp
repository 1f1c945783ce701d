#include <doctest.h>

#include "chipfire/symmetry.hpp"
#include "chipfire/verify.hpp"

using namespace chipfire;

TEST_CASE("involution on vertices and edge points") {
  ChainOfLoops chain = build_chain_of_loops(4, Rational(6), Rational(1));
  Involution inv(chain);

  CHECK(inv.map_point(chain.marked_point(0)) == chain.marked_point(4));
  CHECK(inv.map_point(chain.marked_point(4)) == chain.marked_point(0));
  CHECK(inv.map_point(chain.marked_point(1)) == chain.marked_point(3));
  // The middle vertex is fixed.
  CHECK(inv.map_point(chain.marked_point(2)) == chain.marked_point(2));
  // Midpoint of J1 maps to the midpoint of J4.
  MetricPoint mid_j1 = chain.graph.point_on_edge(chain.long_edge(1), Rational(3));
  MetricPoint mid_j4 = chain.graph.point_on_edge(chain.long_edge(4), Rational(3));
  CHECK(inv.map_point(mid_j1) == mid_j4);
}

TEST_CASE("involution squares to the identity with a unique fixed point") {
  ChainOfLoops chain = build_chain_of_loops(4, Rational(6), Rational(1));
  Involution inv(chain);
  RefinedGraph rg = refine(chain.graph, Rational(1, 2));
  int fixed = 0;
  for (int v = 0; v < rg.vertex_count(); ++v) {
    MetricPoint p = rg.grid_point(v);
    MetricPoint image = inv.map_point(p);
    CHECK(inv.map_point(image) == p);
    if (image == p) ++fixed;
  }
  CHECK(fixed == 1);
  CHECK(inv.map_point(chain.marked_point(2)) == chain.marked_point(2));
}

TEST_CASE("involution is an isometry") {
  ChainOfLoops chain = build_chain_of_loops(2, Rational(2), Rational(1));
  Involution inv(chain);
  RefinedGraph rg = refine(chain.graph, Rational(1));
  for (int a = 0; a < rg.vertex_count(); ++a) {
    for (int b = a + 1; b < rg.vertex_count(); ++b) {
      Rational direct = point_distance(chain.graph, rg.grid_point(a), rg.grid_point(b));
      Rational mirrored = point_distance(chain.graph, inv.map_point(rg.grid_point(a)),
                                         inv.map_point(rg.grid_point(b)));
      CHECK(direct == mirrored);
    }
  }
}

TEST_CASE("involution needs even genus") {
  ChainOfLoops odd = build_chain_of_loops(3);
  CHECK_THROWS_AS(Involution{odd}, Error);
}

TEST_CASE("divisor pushforward basics") {
  ChainOfLoops chain = build_chain_of_loops(4, Rational(6), Rational(1));
  Involution inv(chain);
  CHECK(inv.map_divisor(Divisor{}).is_zero());
  Divisor fixed = single_chip(chain.marked_point(2), 5);
  CHECK(inv.map_divisor(fixed) == fixed);
  RefinedGraph rg = refine(chain.graph, Rational(1));
  PencilDivisor dp = path_to_divisor(chain, rg, {1, 2, 1, 2, 1});
  Divisor mirrored = inv.map_divisor(dp.divisor);
  CHECK(mirrored.degree() == dp.divisor.degree());
  // Palindromic path: the mirrored divisor stays in the same class.
  CHECK(is_equivalent(rg, dp.divisor, mirrored));
}

TEST_CASE("pushforward preserves rank") {
  for (int g : {2, 4}) {
    ChainOfLoops chain = build_chain_of_loops(g);
    Involution inv(chain);
    RefinedGraph rg = refine(chain.graph, Rational(1));
    for (auto& p : enumerate_paths(g)) {
      PencilDivisor dp = path_to_divisor(chain, rg, p, /*certify=*/false);
      for (const Divisor& d : {dp.divisor, 2 * dp.divisor}) {
        CHECK(rank(rg, inv.map_divisor(d)).rank == rank(rg, d).rank);
      }
    }
  }
}

TEST_CASE("transport function values for the smallest path") {
  ChainOfLoops chain = build_chain_of_loops(2, Rational(2), Rational(1));
  RefinedGraph rg = refine(chain.graph, Rational(1));
  PLFunction f = build_f_function(chain, rg, {1, 2, 1});
  // f_0 = 0, ascent adds p_0 = 1, descent adds p_2 = 1.
  CHECK(f.values[rg.vertex_of(chain.marked_point(0))] == Rational(0));
  CHECK(f.values[rg.vertex_of(chain.marked_point(1))] == Rational(1));
  CHECK(f.values[rg.vertex_of(chain.marked_point(2))] == Rational(2));
  // Ascent loop: flat on J1 up to ell - p_0 = 1, then slope 1.
  CHECK(f.values[rg.vertex_of(chain.graph.point_on_edge(chain.long_edge(1), Rational(1)))] ==
        Rational(0));
  // Descent loop: slope 1 on J2 up to p_2 = 1, then flat at f_1 + p_2 = 2.
  CHECK(f.values[rg.vertex_of(chain.graph.point_on_edge(chain.long_edge(2), Rational(1)))] ==
        Rational(2));
}

TEST_CASE("ascent short edges climb with slope p_{i-1}") {
  ChainOfLoops chain = build_chain_of_loops(4, Rational(6), Rational(1));
  RefinedGraph rg = refine(chain.graph, Rational(1, 2));
  LatticePath p{1, 2, 3, 2, 1};
  PLFunction f = build_f_function(chain, rg, p);
  // On I2 (ascent with p_1 = 2) the value at offset 1/2 is f_1 + 2 * 1/2.
  Rational f1 = f.values[rg.vertex_of(chain.marked_point(1))];
  MetricPoint half = chain.graph.point_on_edge(chain.short_edge(2), Rational(1, 2));
  CHECK(f.values[rg.vertex_of(half)] == f1 + Rational(1));
}

TEST_CASE("transport function divisor identity at g=4") {
  ChainOfLoops chain = build_chain_of_loops(4, Rational(6), Rational(1));
  Involution inv(chain);
  RefinedGraph rg = refine(chain.graph, Rational(1));
  for (auto& p : enumerate_paths(4)) {
    PencilDivisor dp = path_to_divisor(chain, rg, p, /*certify=*/false);
    PencilDivisor drev = path_to_divisor(chain, rg, reverse_path(p), /*certify=*/false);
    Divisor expected = inv.map_divisor(drev.divisor) - dp.divisor;
    Divisor actual = div_of_pl_function(rg, build_f_function(chain, rg, p));
    CHECK(actual == expected);
    CHECK(actual.degree() == 0);
  }
}

TEST_CASE("transport function input validation") {
  ChainOfLoops wide = build_chain_of_loops(2, Rational(2), Rational(3, 2));
  RefinedGraph rg = refine(wide.graph, Rational(1, 2));
  CHECK_THROWS_AS(build_f_function(wide, rg, {1, 2, 1}), Error);

  ChainOfLoops tight = build_chain_of_loops(4, Rational(2), Rational(1));
  RefinedGraph rg2 = refine(tight.graph, Rational(1));
  // Peak height 3 exceeds ell = 2.
  CHECK_THROWS_AS(build_f_function(tight, rg2, {1, 2, 3, 2, 1}), Error);
}

TEST_CASE("invariance matches palindromes") {
  ChainOfLoops chain = build_chain_of_loops(6, Rational(10), Rational(1));
  RefinedGraph rg = refine(chain.graph, Rational(1));
  CHECK(is_invariant_pencil(chain, rg, {1, 2, 1, 2, 1, 2, 1}));
  CHECK_FALSE(is_invariant_pencil(chain, rg, {1, 2, 1, 2, 3, 2, 1}));
  int invariant = 0;
  for (auto& p : enumerate_paths(6)) invariant += is_invariant_pencil(chain, rg, p) ? 1 : 0;
  CHECK(invariant == 3);
}

TEST_CASE("sigma checks all pass at g=2") {
  ChainOfLoops chain = build_chain_of_loops(2, Rational(2), Rational(1));
  RefinedGraph rg = refine(chain.graph, Rational(1));
  auto checks = verify_prop_sigma(chain, rg);
  REQUIRE(checks.size() == 1);
  CHECK(checks[0].passed());
  CHECK(checks[0].invariant);
}
