#include "doctest.h"
#include "oracles.hpp"
#include "snarklab/canonical.hpp"
#include "snarklab/fixtures.hpp"
#include "snarklab/multipole.hpp"

using namespace snarklab;

TEST_CASE("fixtures are simple connected cubic graphs") {
  for (const Multipole& g : {fixtures::k4(), fixtures::k33(), fixtures::cube_q3(),
                             fixtures::petersen(), fixtures::flower_snark(5), fixtures::flower_snark(7)}) {
    CHECK(g.is_graph());
    CHECK(g.is_cubic());
    CHECK(g.is_simple());
    CHECK(g.is_connected());
  }
  CHECK(fixtures::petersen().order() == 10);
  CHECK(fixtures::flower_snark(7).order() == 28);
}

TEST_CASE("validation flags problems") {
  auto r = validate_multipole(fixtures::petersen());
  CHECK(r.valid());
  CHECK(r.semiedge_count == 0);
  CHECK(validate_multipole(fixtures::c4_pole()).semiedge_count == 4);
  // semiedge order must cover every free end
  CHECK_THROWS_AS(Multipole(1, {Edge{End{0}, End{}}}, {}), Error);
  // refs may not point at attached ends
  CHECK_THROWS_AS(Multipole(1, {Edge{End{0}, End{}}}, {SemiedgeRef{0, 0}}), Error);
}

TEST_CASE("i-extension of K4 yields K33") {
  Multipole k4 = fixtures::k4();
  int e = k4.find_edge(0, 1);
  int f = k4.find_edge(2, 3);
  Multipole child = i_extension(k4, e, f);
  CHECK(child.order() == 6);
  CHECK(child.is_cubic());
  CHECK(oracles::isomorphic_naive(child, fixtures::k33()));
  CHECK(are_isomorphic(child, fixtures::k33()));
}

TEST_CASE("i-extension rejects bad edges") {
  Multipole k4 = fixtures::k4();
  CHECK_THROWS_AS(i_extension(k4, 0, 0), Error);
  CHECK_THROWS_AS(i_extension(k4, 0, 99), Error);
}

TEST_CASE("complete junction of two adjacent-pair gadgets") {
  Multipole gadget = fixtures::adjacent_pair_gadget();
  // spreading each vertex's semiedges over both vertices of the other copy gives K4
  JunctionPairing cross;
  cross.pairs = {{0, 0}, {1, 2}, {2, 1}, {3, 3}};
  Multipole g = complete_junction(gadget, gadget, cross);
  CHECK(g.is_graph());
  CHECK(g.is_cubic());
  CHECK(oracles::isomorphic_naive(g, fixtures::k4()));
  // the identity pairing creates parallel edges: still a valid cubic multipole
  JunctionPairing ident;
  ident.pairs = {{0, 0}, {1, 1}, {2, 2}, {3, 3}};
  Multipole h = complete_junction(gadget, gadget, ident);
  CHECK(h.is_cubic());
  CHECK_FALSE(h.is_simple());
}

TEST_CASE("complete junction size and pairing errors") {
  JunctionPairing partial;
  partial.pairs = {{0, 0}};
  CHECK_THROWS_AS(complete_junction(fixtures::c4_pole(), fixtures::c4_pole(), partial), Error);
  JunctionPairing dup;
  dup.pairs = {{0, 0}, {0, 1}, {2, 2}, {3, 3}};
  CHECK_THROWS_AS(complete_junction(fixtures::c4_pole(), fixtures::c4_pole(), dup), Error);
}

TEST_CASE("junction of isolated edges detects free loops") {
  Multipole iso = fixtures::two_isolated_edges_pole();
  JunctionPairing ident;
  ident.pairs = {{0, 0}, {1, 1}, {2, 2}, {3, 3}};
  CHECK_THROWS_AS(complete_junction(iso, iso, ident), Error);
}

TEST_CASE("partial junction keeps leftover semiedges in order") {
  Multipole c4 = fixtures::c4_pole();
  JunctionPairing two;
  two.pairs = {{2, 0}, {3, 1}};
  Multipole joined = partial_junction(c4, c4, two);
  CHECK(joined.order() == 8);
  CHECK(joined.pole_count() == 4);
  CHECK(joined.is_cubic());
}

TEST_CASE("extract_four_pole in both modes") {
  Multipole p = fixtures::petersen();
  Multipole i = extract_four_pole(p, AdjacentVertices{0, 5});
  CHECK(i.order() == 8);
  CHECK(i.pole_count() == 4);
  CHECK(validate_multipole(i).valid());

  int e = p.find_edge(0, 1);
  int f = p.find_edge(3, 4);
  Multipole h = extract_four_pole(p, NonadjacentEdges{e, f});
  CHECK(h.order() == 10);
  CHECK(h.pole_count() == 4);

  CHECK_THROWS_AS(extract_four_pole(p, AdjacentVertices{0, 2}), Error);  // not adjacent
  int e2 = p.find_edge(0, 1), f2 = p.find_edge(1, 2);
  CHECK_THROWS_AS(extract_four_pole(p, NonadjacentEdges{e2, f2}), Error);  // share vertex 1
}

TEST_CASE("sever then self-junction round-trips") {
  Multipole p = fixtures::petersen();
  int e = p.find_edge(0, 1);
  int f = p.find_edge(3, 4);
  Multipole cut = sever_edges(p, {e, f});
  CHECK(cut.pole_count() == 4);
  // semiedges 0,1 came from e and 2,3 from f; rejoin them
  Multipole back = self_junction(cut, {{0, 1}, {2, 3}});
  CHECK(back.is_graph());
  CHECK(are_isomorphic(back, p));
}
