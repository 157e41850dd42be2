#include <filesystem>
#include <set>

#include "doctest.h"
#include "example31.hpp"
#include "oracles.hpp"
#include "snarklab/canonical.hpp"
#include "snarklab/coloring.hpp"
#include "snarklab/composer.hpp"
#include "snarklab/fixtures.hpp"
#include "snarklab/graph6.hpp"
#include "snarklab/measures.hpp"
#include "snarklab/structure.hpp"

using namespace snarklab;

TEST_CASE("Prop 2.10 extension of the vertex-deleted Petersen pole") {
  Multipole p = fixtures::petersen();
  Multipole i = extract_four_pole(p, AdjacentVertices{0, 5});
  Multipole ext = extend_colour_open(i);
  CHECK(ext.order() == 10);
  CHECK_FALSE(is_three_edge_colorable(ext));
  CHECK(are_isomorphic(ext, p));
  CHECK(oracles::isomorphic_naive(ext, p));
}

TEST_CASE("Prop 2.10 extension of the edge-severed Petersen pole") {
  Multipole p = fixtures::petersen();
  Multipole h = extract_four_pole(p, NonadjacentEdges{p.find_edge(0, 1), p.find_edge(3, 4)});
  Multipole ext = extend_colour_open(h);
  CHECK(ext.order() == 10);  // no vertices added: the couples close back up
  CHECK(are_isomorphic(ext, p));
}

TEST_CASE("colour-closed poles do not extend to snarks") {
  CHECK_THROWS_AS(extend_colour_open(fixtures::c4_pole()), Error);
}

TEST_CASE("two-vertex extension of the 4-cycle gives K33") {
  Multipole ext = extend_with_two_vertices(fixtures::c4_pole());
  CHECK(ext.order() == 6);
  CHECK(are_isomorphic(ext, fixtures::k33()));
}

TEST_CASE("two-vertex extension adds exactly two vertices") {
  Multipole p = fixtures::petersen();
  Multipole i = extract_four_pole(p, AdjacentVertices{0, 5});
  Multipole ext = extend_with_two_vertices(i);
  CHECK(ext.order() == i.order() + 2);
  CHECK(is_cyclically_k_edge_connected(ext, 4));
}

TEST_CASE("decomposition of the cycle-of-poles snark") {
  auto ex = testutil::build_cycle_of_poles();
  REQUIRE(ex.cut_delta_i.size() == 4);
  CHECK(ex.g.order() == 28);
  CHECK_FALSE(is_three_edge_colorable(ex.g));

  DecompositionCase dc = decompose_along_cut(ex.g, ex.cut_delta_i);
  CHECK(dc.label == DecompositionLabel::BothColourable);
  // the isochromatic side completes to the Petersen graph
  const FragmentExtension& iso_side =
      dc.left.extension.order() == 10 ? dc.left : dc.right;
  const FragmentExtension& het_side =
      dc.left.extension.order() == 10 ? dc.right : dc.left;
  CHECK(are_isomorphic(iso_side.extension, fixtures::petersen()));
  CHECK(het_side.extension.order() == 20);
  CHECK_FALSE(is_three_edge_colorable(het_side.extension));
  CHECK(!cycle_separating_cuts(het_side.extension, 2).empty());
  REQUIRE(dc.omega.has_value());
  CHECK(*dc.omega == 2);
}

TEST_CASE("decompose_along_cut validates its cut") {
  Multipole p = fixtures::petersen();
  CHECK_THROWS_AS(decompose_along_cut(p, {0, 1, 2}), Error);       // not 4 edges
  CHECK_THROWS_AS(decompose_along_cut(p, {0, 1, 2, 3}), Error);    // not cycle-separating
}

TEST_CASE("pruned Petersen x Petersen join finds the two 18-vertex classes") {
  Multipole p = fixtures::petersen();
  FourJoinOptions opt;
  opt.orbit_pruning = true;
  opt.max_order = 18;
  std::set<std::string> snark_certs;
  bool saw_dot_product = false;
  four_join_stream(p, p, opt, [&](const Multipole& g, const JoinSpec& spec, const std::string& cert) {
    if (g.order() != 18) return;
    if (is_three_edge_colorable(g)) return;
    if (!is_cyclically_k_edge_connected(g, 4)) return;
    snark_certs.insert(cert);
    if (spec.left_mode != spec.right_mode) saw_dot_product = true;  // one side of each kind
  });
  CHECK(snark_certs.size() == 2);
  CHECK(saw_dot_product);
  // the two classes are distinguishable without certificates
  std::vector<size_t> aut_sizes;
  for (const std::string& cert : snark_certs)
    aut_sizes.push_back(automorphism_group(graph6_decode(cert)).size());
  CHECK(aut_sizes[0] != aut_sizes[1]);
}

TEST_CASE("order arithmetic of the join modes") {
  Multipole p = fixtures::petersen();
  FourJoinOptions opt;
  opt.max_order = 20;
  std::set<int> orders;
  four_join_stream(p, p, opt, [&](const Multipole& g, const JoinSpec&, const std::string&) {
    orders.insert(g.order());
  });
  CHECK(orders == std::set<int>{16, 18, 20});  // 10+10 minus 2 vertices per vertex-mode side
}

TEST_CASE("oddness-4 search over the Petersen pool") {
  auto report = oddness4_search({fixtures::petersen()}, Oddness4Options{.max_order = 18});
  CHECK(report.hits.empty());
  REQUIRE(report.audits.size() == 1);
  CHECK(report.audits[0].snarks >= 2);
  CHECK(report.audits[0].zeta_ge_4 >= 2);
  CHECK(report.audits[0].omega_ge_4 == 0);

  auto tiny = oddness4_search({fixtures::petersen()}, Oddness4Options{.max_order = 15});
  CHECK(tiny.audits[0].joins_enumerated == 0);
}

TEST_CASE("checkpointed search resumes without recomputing") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "snarklab_ck_test";
  fs::create_directories(dir);
  fs::path ck = dir / "checkpoint.json";
  fs::remove(ck);

  Oddness4Options opt;
  opt.max_order = 16;
  opt.checkpoint_path = ck.string();
  opt.config_hash = 42;
  auto first = oddness4_search({fixtures::petersen()}, opt);
  CHECK(first.pairs_resumed == 0);
  auto second = oddness4_search({fixtures::petersen()}, opt);
  CHECK(second.pairs_resumed == second.pairs_total);
  CHECK(second.audits.size() == first.audits.size());
  CHECK(second.audits[0].joins_enumerated == first.audits[0].joins_enumerated);

  opt.config_hash = 43;
  CHECK_THROWS_AS(oddness4_search({fixtures::petersen()}, opt), Error);
  fs::remove_all(dir);
}
