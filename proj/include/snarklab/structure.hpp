#pragma once

#include <optional>
#include <vector>

#include "snarklab/multipole.hpp"

namespace snarklab {

struct CutReport {
  std::vector<int> cut;     // edge ids
  std::vector<int> side_a;  // vertex sets of the two fragments
  std::vector<int> side_b;
  bool independent = false;
};

struct CyclicConnectivityResult {
  int zeta = 0;
  bool capped = false;  // no cycle-separating cut below the cycle rank
  std::optional<CutReport> witness;
};

struct StructureRecord {
  int girth = 0;
  int cycle_rank = 0;
  int cyclic_connectivity = 0;
  bool capped = false;
};

/// Shortest cycle length over proper edges.
int girth(const Multipole& g);

int cycle_rank(const Multipole& g);

CyclicConnectivityResult cyclic_connectivity(const Multipole& g);

/// Fast decision: no cycle-separating cut of size < k exists.
bool is_cyclically_k_edge_connected(const Multipole& g, int k);

StructureRecord structure_record(const Multipole& g);

/// All cuts S of size exactly k such that G-S has exactly two components, both
/// containing cycles, with every edge of S joining the two sides.
std::vector<CutReport> cycle_separating_cuts(const Multipole& g, int k);

/// The two fragments left by a cut, as multipoles whose semiedge order follows
/// the listed cut edges (each cut edge contributes one dangling edge per side).
std::pair<Multipole, Multipole> split_along_cut(const Multipole& g, const std::vector<int>& cut);

/// Inclusion-minimal fragments over all minimum cycle-separating cuts.
std::vector<std::vector<int>> atoms(const Multipole& g);

struct TwoCut {
  int e1 = -1, e2 = -1;
  std::vector<int> side_a, side_b;
};

struct ComparabilityReport {
  bool is_four_cycle = false;
  bool all_comparable = false;
  std::vector<TwoCut> cuts;
  /// Common split of the four attachment vertices, when nontrivial 2-cuts exist.
  std::array<std::vector<int>, 2> attachment_bipartition;
};

/// Comparability of all nontrivial 2-edge-cuts of a fragment cut out of a
/// cyclically 4-edge-connected cubic graph.
ComparabilityReport check_comparable_two_cuts(const Multipole& fragment);

/// Edge ids of all bridges.
std::vector<int> bridges(const Multipole& g);

}  // namespace snarklab
