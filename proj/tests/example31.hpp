// Shared construction: a 28-vertex snark assembled from one vertex-deleted and
// two edge-severed Petersen 4-poles, arranged in a cycle with couple-respecting
// junctions. Used by the composer tests and the acceptance suite.
#pragma once

#include "snarklab/fixtures.hpp"
#include "snarklab/multipole.hpp"

namespace snarklab::testutil {

struct CycleOfPoles {
  Multipole i;        // isochromatic: Petersen minus two adjacent vertices
  Multipole h;        // heterochromatic: Petersen with two nonadjacent edges severed
  Multipole h2;       // partial junction of two copies of h
  Multipole g;        // complete junction of i with h2; a snark of order 28
  std::vector<int> cut_delta_i;  // the 4-edge-cut separating i from h2 inside g
};

inline CycleOfPoles build_cycle_of_poles() {
  CycleOfPoles out;
  Multipole p = fixtures::petersen();
  out.i = extract_four_pole(p, AdjacentVertices{0, 5});
  out.h = extract_four_pole(p, NonadjacentEdges{p.find_edge(0, 1), p.find_edge(3, 4)});
  JunctionPairing couple_to_couple;
  couple_to_couple.pairs = {{2, 0}, {3, 1}};
  out.h2 = partial_junction(out.h, out.h, couple_to_couple);
  JunctionPairing ident;
  ident.pairs = {{0, 0}, {1, 1}, {2, 2}, {3, 3}};
  out.g = complete_junction(out.i, out.h2, ident);
  for (int e = 0; e < out.g.edge_count(); ++e) {
    const Edge& edge = out.g.edge(e);
    bool a_in = edge.a.vertex < out.i.order();
    bool b_in = edge.b.vertex < out.i.order();
    if (a_in != b_in) out.cut_delta_i.push_back(e);
  }
  return out;
}

}  // namespace snarklab::testutil
