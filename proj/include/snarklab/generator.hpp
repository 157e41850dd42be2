#pragma once

#include <string>
#include <vector>

#include "snarklab/multipole.hpp"

namespace snarklab {

struct GenerationLevel {
  int order = 0;
  std::vector<std::string> certificates;  // sorted canonical graph6, one per class
};

/// All cyclically 4-edge-connected cubic graphs up to target_order, one
/// canonical certificate per isomorphism class. Levels are built from K4 (and
/// Q3, injected at order 8) by I-extensions over nonadjacent edge pairs, with
/// certificate dedupe; every kept representative is re-verified to have
/// zeta >= 4 by the structure module.
std::vector<GenerationLevel> generate_c4ec_cubic(int target_order, int order_bound = 24);

/// One generation step: all classes of order prev.order + 2 reachable from
/// prev by nonadjacent I-extensions (Q3 injected when the new order is 8).
GenerationLevel expand_level(const GenerationLevel& prev);

/// Keep the uncolourable graphs with girth at least girth_min.
std::vector<std::string> filter_snarks(const std::vector<std::string>& certificates, int girth_min = 0);

/// True when some I-extension edge of g can be reduced (delete the edge,
/// suppress the two divalent vertices) to a smaller simple cyclically
/// 4-edge-connected cubic graph.
bool has_c4ec_reduction(const Multipole& g);

}  // namespace snarklab
