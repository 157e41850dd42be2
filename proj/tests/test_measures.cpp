#include "doctest.h"
#include "oracles.hpp"
#include "snarklab/fixtures.hpp"
#include "snarklab/measures.hpp"

using namespace snarklab;

TEST_CASE("perfect matching counts") {
  CHECK(perfect_matchings(fixtures::k4()).size() == 3);
  CHECK(perfect_matchings(fixtures::petersen()).size() == 6);
}

TEST_CASE("oddness of the fixtures") {
  CHECK(oddness(fixtures::k4()).oddness == 0);
  CHECK(oddness(fixtures::k33()).oddness == 0);
  CHECK(oddness(fixtures::cube_q3()).oddness == 0);
  auto p = oddness(fixtures::petersen());
  CHECK(p.oddness == 2);
  // witness: a 2-factor covering every vertex, with the reported odd count
  int covered = 0, odd = 0;
  for (const auto& circuit : p.witness.circuits) {
    covered += static_cast<int>(circuit.size());
    if (circuit.size() % 2 == 1) ++odd;
  }
  CHECK(covered == 10);
  CHECK(odd == 2);
}

TEST_CASE("oddness agrees with naive 2-regular subgraph enumeration") {
  for (const Multipole& g : {fixtures::k4(), fixtures::k33(), fixtures::cube_q3(),
                             fixtures::petersen()}) {
    CHECK(oddness(g).oddness == oracles::oddness_naive(g));
  }
}

TEST_CASE("oddness requires a bridgeless graph") {
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
  Multipole bridged = Multipole::graph(10, edges);
  CHECK_THROWS_AS(oddness(bridged), Error);
}

TEST_CASE("resistance of the fixtures") {
  CHECK(resistance(fixtures::k4()).resistance == 0);
  auto p = resistance(fixtures::petersen());
  CHECK(p.resistance == 2);
  CHECK(p.removal.size() == 2);
  CHECK(p.removal_independent);
  CHECK(resistance(fixtures::flower_snark(5)).resistance == 2);
}

TEST_CASE("measure inequalities on small snarks") {
  for (const Multipole& g : {fixtures::petersen(), fixtures::flower_snark(5)}) {
    auto r = measures_record(g);
    CHECK(r.resistance <= r.oddness);
    CHECK(r.oddness % 2 == 0);
    CHECK(r.resistance != 1);
    CHECK((r.resistance == 2) == (r.oddness == 2));
  }
}
