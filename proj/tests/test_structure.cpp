#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "snarklab/canonical.hpp"
#include "snarklab/fixtures.hpp"
#include "snarklab/structure.hpp"

using namespace snarklab;

namespace {

// two K4's, each with one edge subdivided, joined by a bridge
Multipole bridged_cubic() {
  std::vector<std::pair<int, int>> edges;
  auto block = [&](int base, int mid) {
    edges.push_back({base + 0, base + 2});
    edges.push_back({base + 0, base + 3});
    edges.push_back({base + 1, base + 2});
    edges.push_back({base + 1, base + 3});
    edges.push_back({base + 2, base + 3});
    edges.push_back({base + 0, mid});
    edges.push_back({base + 1, mid});
  };
  block(0, 4);
  block(5, 9);
  edges.push_back({4, 9});
  return Multipole::graph(10, edges);
}

}  // namespace

TEST_CASE("girth of the fixtures") {
  CHECK(girth(fixtures::k4()) == 3);
  CHECK(girth(fixtures::k33()) == 4);
  CHECK(girth(fixtures::cube_q3()) == 4);
  CHECK(girth(fixtures::petersen()) == 5);
  CHECK(girth(fixtures::flower_snark(5)) == 5);
}

TEST_CASE("cycle rank") {
  CHECK(cycle_rank(fixtures::k4()) == 3);
  CHECK(cycle_rank(fixtures::petersen()) == 6);
}

TEST_CASE("cyclic connectivity of the fixtures") {
  auto p = cyclic_connectivity(fixtures::petersen());
  CHECK(p.zeta == 5);
  CHECK_FALSE(p.capped);
  REQUIRE(p.witness.has_value());
  CHECK(p.witness->cut.size() == 5);

  auto k4 = cyclic_connectivity(fixtures::k4());
  CHECK(k4.zeta == 3);
  CHECK(k4.capped);  // K4 holds no two disjoint cycles

  auto k33 = cyclic_connectivity(fixtures::k33());
  CHECK(k33.zeta == 4);
  CHECK(k33.capped);

  auto q3 = cyclic_connectivity(fixtures::cube_q3());
  CHECK(q3.zeta == 4);
  CHECK_FALSE(q3.capped);
}

TEST_CASE("fast k-connectivity decision") {
  CHECK(is_cyclically_k_edge_connected(fixtures::petersen(), 5));
  CHECK(is_cyclically_k_edge_connected(fixtures::petersen(), 4));
  CHECK(is_cyclically_k_edge_connected(fixtures::cube_q3(), 4));
  CHECK_FALSE(is_cyclically_k_edge_connected(bridged_cubic(), 2));
}

TEST_CASE("cycle separating cuts of Petersen") {
  CHECK(cycle_separating_cuts(fixtures::petersen(), 4).empty());
  auto cuts = cycle_separating_cuts(fixtures::petersen(), 5);
  CHECK(!cuts.empty());
  for (const CutReport& cut : cuts) {
    CHECK(cut.cut.size() == 5);
    CHECK(cut.independent);
    CHECK(cut.side_a.size() + cut.side_b.size() == 10);
  }
}

TEST_CASE("split along a cut and rebuild") {
  Multipole p = fixtures::petersen();
  auto cuts = cycle_separating_cuts(p, 5);
  REQUIRE(!cuts.empty());
  auto [a, b] = split_along_cut(p, cuts.front().cut);
  CHECK(a.pole_count() == 5);
  CHECK(b.pole_count() == 5);
  JunctionPairing ident;
  for (int i = 0; i < 5; ++i) ident.pairs.push_back({i, i});
  Multipole back = complete_junction(a, b, ident);
  CHECK(are_isomorphic(back, p));
}

TEST_CASE("atoms of Petersen are pentagons") {
  auto frags = atoms(fixtures::petersen());
  CHECK(!frags.empty());
  for (const auto& f : frags) CHECK(f.size() == 5);
}

TEST_CASE("comparable 2-cuts oracle on known fragments") {
  Multipole p = fixtures::petersen();
  auto i = extract_four_pole(p, AdjacentVertices{0, 5});
  auto ri = check_comparable_two_cuts(i);
  CHECK((ri.all_comparable || ri.is_four_cycle));

  auto rc4 = check_comparable_two_cuts(fixtures::c4_pole());
  CHECK(rc4.is_four_cycle);

  Multipole q3 = fixtures::cube_q3();
  auto cuts = cycle_separating_cuts(q3, 4);
  REQUIRE(!cuts.empty());
  auto [a, b] = split_along_cut(q3, cuts.front().cut);
  auto ra = check_comparable_two_cuts(a);
  CHECK((ra.all_comparable || ra.is_four_cycle));
}

TEST_CASE("bridges") {
  CHECK(bridges(fixtures::petersen()).empty());
  Multipole g = bridged_cubic();
  auto b = bridges(g);
  REQUIRE(b.size() == 1);
  const Edge& e = g.edge(b.front());
  CHECK(std::minmax({e.a.vertex, e.b.vertex}) == std::pair<int, int>{4, 9});
}
