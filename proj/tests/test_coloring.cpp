#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "snarklab/coloring.hpp"
#include "snarklab/fixtures.hpp"

using namespace snarklab;

TEST_CASE("colorability of the standard fixtures") {
  for (const Multipole& g : {fixtures::k4(), fixtures::k33(), fixtures::cube_q3()}) {
    auto c = three_edge_coloring(g);
    REQUIRE(c.has_value());
    CHECK(coloring_is_proper(g, *c));
  }
  CHECK_FALSE(is_three_edge_colorable(fixtures::petersen()));
  CHECK_FALSE(is_three_edge_colorable(fixtures::flower_snark(5)));
  CHECK_FALSE(is_three_edge_colorable(fixtures::flower_snark(7)));
}

TEST_CASE("solver agrees with the exhaustive oracle on small inputs") {
  for (const Multipole& m : {fixtures::c4_pole(), fixtures::adjacent_pair_gadget(),
                             fixtures::two_isolated_edges_pole(), fixtures::k4()}) {
    CHECK(is_three_edge_colorable(m) == oracles::colorable_naive(m));
  }
}

TEST_CASE("coloring types use first-appearance relabeling") {
  CHECK(coloring_type({1, 1, 1, 1}) == "1111");
  CHECK(coloring_type({2, 2, 3, 3}) == "1122");
  CHECK(coloring_type({3, 1, 3, 1}) == "1212");
  CHECK(coloring_type({2, 3, 3, 2}) == "1221");
}

TEST_CASE("boundary colorings of the C4 pole") {
  auto set = boundary_colorings(fixtures::c4_pole());
  CHECK(set.types == std::set<std::string>{"1111", "1122", "1221"});
  std::set<std::vector<int>> got(set.tuples.begin(), set.tuples.end());
  CHECK(got == oracles::boundary_colorings_naive(fixtures::c4_pole()));
}

TEST_CASE("boundary colorings obey the parity lemma") {
  for (const Multipole& m : {fixtures::c4_pole(), fixtures::adjacent_pair_gadget(),
                             fixtures::two_isolated_edges_pole()}) {
    for (const auto& tuple : boundary_colorings(m).tuples) {
      int k1 = 0, k2 = 0, k3 = 0;
      for (int c : tuple) (c == 1 ? k1 : c == 2 ? k2 : k3)++;
      CHECK(k1 % 2 == k2 % 2);
      CHECK(k2 % 2 == k3 % 2);
    }
  }
}

TEST_CASE("classification of the Example 3.1 poles") {
  Multipole p = fixtures::petersen();
  // I: remove two adjacent vertices -> isochromatic
  Multipole i = extract_four_pole(p, AdjacentVertices{0, 5});
  auto ci = classify_four_pole(i);
  REQUIRE(ci.verdict == PoleClassification::Verdict::ColourOpen);
  CHECK(ci.kind == OpenKind::Isochromatic);
  // couples pair the semiedges formerly incident with the same vertex
  CHECK(ci.couples[0] == std::pair<int, int>{0, 1});
  CHECK(ci.couples[1] == std::pair<int, int>{2, 3});

  // H: sever two nonadjacent edges -> heterochromatic
  Multipole h = extract_four_pole(p, NonadjacentEdges{p.find_edge(0, 1), p.find_edge(3, 4)});
  auto ch = classify_four_pole(h);
  REQUIRE(ch.verdict == PoleClassification::Verdict::ColourOpen);
  CHECK(ch.kind == OpenKind::Heterochromatic);
  CHECK(ch.couples[0] == std::pair<int, int>{0, 1});
  CHECK(ch.couples[1] == std::pair<int, int>{2, 3});

  auto cc = classify_four_pole(fixtures::c4_pole());
  CHECK(cc.verdict == PoleClassification::Verdict::ColourClosed);
}

TEST_CASE("kempe switches are proper involutions") {
  Multipole g = fixtures::cube_q3();
  auto c = three_edge_coloring(g);
  REQUIRE(c.has_value());
  for (int e = 0; e < g.edge_count(); ++e) {
    int i = c->color[e];
    int j = i == 1 ? 2 : 1;
    EdgeColoring once = kempe_switch(g, *c, e, i, j);
    CHECK(coloring_is_proper(g, once));
    EdgeColoring twice = kempe_switch(g, once, e, i, j);
    CHECK(twice.color == c->color);
  }
}

TEST_CASE("kempe chains alternate the two colors") {
  Multipole g = fixtures::k33();
  auto c = three_edge_coloring(g);
  REQUIRE(c.has_value());
  auto chain = kempe_chain(g, *c, 0, c->color[0], c->color[0] == 1 ? 2 : 1);
  CHECK(!chain.empty());
  for (int e : chain) CHECK((c->color[e] == c->color[0] || c->color[e] == (c->color[0] == 1 ? 2 : 1)));
}

TEST_CASE("minimum zero class matches resistance-style expectations") {
  auto k4 = minimum_zero_class_coloring(fixtures::k4());
  CHECK(k4.zero_edges.empty());
  auto p = minimum_zero_class_coloring(fixtures::petersen());
  CHECK(p.zero_edges.size() == 2);
  CHECK(p.zero_class_independent);
  CHECK(coloring_is_proper(fixtures::petersen(), p.coloring));
}
