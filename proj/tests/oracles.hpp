// Independent slow reference implementations used to cross-check the library.
#pragma once

#include <set>
#include <string>
#include <vector>

#include "snarklab/multipole.hpp"

namespace snarklab::oracles {

/// 3-edge-colorability by trying all 3^m assignments (semiedges included).
bool colorable_naive(const Multipole& m);

/// All boundary tuples over the semiedge order, by exhaustive assignment.
std::set<std::vector<int>> boundary_colorings_naive(const Multipole& m);

/// Isomorphism by trying all vertex permutations; n <= 10.
bool isomorphic_naive(const Multipole& g1, const Multipole& g2);

/// Isomorphism by plain vertex-by-vertex backtracking (no partition
/// refinement); usable up to ~20 vertices.
bool isomorphic_backtracking(const Multipole& g1, const Multipole& g2);

/// Every isomorphism class of simple connected cubic graphs on n vertices,
/// as canonical certificates. Degree-constrained backtracking over adjacency
/// sets with first-use vertex ordering, then certificate dedupe.
std::vector<std::string> all_cubic_graphs(int n);

/// All circuits of g as vertex sets with a witness sequence; n <= 12.
std::vector<std::vector<int>> all_circuits(const Multipole& g);

/// Minimum odd circuits over all 2-regular spanning subgraphs, by direct
/// enumeration; -1 when no 2-factor exists.
int oddness_naive(const Multipole& g);

}  // namespace snarklab::oracles
