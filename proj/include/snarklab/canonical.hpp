#pragma once

#include <string>
#include <vector>

#include "snarklab/multipole.hpp"

namespace snarklab {

struct CanonicalCertificate {
  std::string certificate;     // graph6 of the canonically relabeled graph
  std::vector<int> relabeling; // old vertex id -> canonical position
};

/// Canonical form of a simple connected closed graph, via equitable partition
/// refinement seeded with distance profiles and full backtracking over target
/// cells; the certificate is the least adjacency encoding over all leaves.
CanonicalCertificate canonical_certificate(const Multipole& g);

/// Every automorphism of g, as old-vertex permutations (identity included).
std::vector<std::vector<int>> automorphism_group(const Multipole& g);

bool are_isomorphic(const Multipole& g1, const Multipole& g2);

enum class OrbitKind { Edge, NonadjacentEdgePair, AdjacentVertexPair };

struct OrbitPartition {
  OrbitKind kind;
  /// Each class lists elements; an element is one edge (as a sorted vertex
  /// pair) or a pair of such pairs, flattened to 2 or 4 vertex ids.
  std::vector<std::vector<std::vector<int>>> classes;
};

OrbitPartition automorphism_orbits(const Multipole& g, OrbitKind kind);

}  // namespace snarklab
