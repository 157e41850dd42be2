#pragma once

#include <vector>

#include "snarklab/multipole.hpp"

namespace snarklab {

struct DominatingCircuitResult {
  bool holds = false;
  std::vector<int> circuit;  // closed vertex sequence (first vertex not repeated)
};

/// Exhaustive search for a circuit touching an endpoint of every edge.
DominatingCircuitResult has_dominating_circuit(const Multipole& g);

bool verify_dominating_circuit(const Multipole& g, const std::vector<int>& circuit);

struct TotalColoringResult {
  int number = 0;  // 4 or 5 for cubic graphs
  std::vector<int> vertex_color;  // witness when number == 4
  std::vector<int> edge_color;
};

/// 4 iff a proper total coloring with 4 colors exists; otherwise 5.
TotalColoringResult total_chromatic_number(const Multipole& g);

bool verify_total_coloring(const Multipole& g, const std::vector<int>& vertex_color,
                           const std::vector<int>& edge_color, int colors);

struct PetersenColoringResult {
  bool holds = false;
  std::vector<int> edge_map;  // edge id of g -> edge id of the Petersen fixture
};

/// Edge map into the Petersen graph sending every vertex star to three
/// mutually adjacent edges; exhaustive backtracking.
PetersenColoringResult has_petersen_coloring(const Multipole& g);

bool verify_petersen_coloring(const Multipole& g, const std::vector<int>& edge_map);

}  // namespace snarklab
