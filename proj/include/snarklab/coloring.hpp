#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "snarklab/multipole.hpp"

namespace snarklab {

/// Colors are Z2 x Z2: (0,0)=0, (0,1)=1, (1,0)=2, (1,1)=3. Proper 3-edge-colorings
/// use {1,2,3}; color 0 marks the minimum class of a 4-edge-coloring.
struct EdgeColoring {
  std::vector<int> color;  // indexed by edge id
};

bool coloring_is_proper(const Multipole& m, const EdgeColoring& c);

/// Decides 3-edge-colorability; the witness is the first coloring found in a
/// fixed search order, so repeated runs agree.
std::optional<EdgeColoring> three_edge_coloring(const Multipole& m);
bool is_three_edge_colorable(const Multipole& m);

/// 3-edge-colorability after deleting the listed edges (equivalently, severing
/// them); the witness colors surviving edges and leaves removed ones at 0.
std::optional<EdgeColoring> three_edge_coloring_without(const Multipole& m, const std::vector<int>& removed);

struct BoundaryColoringSet {
  std::vector<std::vector<int>> tuples;  // sorted; colors per semiedge_order position
  std::set<std::string> types;           // k=4 only: subset of {1111,1122,1212,1221}
};

/// Exact enumeration of Col(M) under the fixed semiedge order.
BoundaryColoringSet boundary_colorings(const Multipole& m);

/// Lexicographically least color-permutation image of a tuple, e.g. "1221".
std::string coloring_type(const std::vector<int>& tuple);

enum class OpenKind { Isochromatic, Heterochromatic };

struct PoleClassification {
  enum class Verdict { Uncolourable, ColourClosed, ColourOpen } verdict;
  OpenKind kind = OpenKind::Isochromatic;                    // valid when ColourOpen
  std::array<std::pair<int, int>, 2> couples{{{-1, -1}, {-1, -1}}};  // semiedge positions
  std::set<std::string> types;
};

PoleClassification classify_four_pole(const Multipole& m);

/// Exchange colors i and j along the maximal Kempe chain through start_edge.
EdgeColoring kempe_switch(const Multipole& m, const EdgeColoring& c, int start_edge, int i, int j);

/// Edge ids of the maximal i-j chain through start_edge.
std::vector<int> kempe_chain(const Multipole& m, const EdgeColoring& c, int start_edge, int i, int j);

struct MinimumColoring {
  EdgeColoring coloring;
  std::vector<int> zero_edges;
  bool zero_class_independent;
};

/// Proper 4-edge-coloring with the smallest possible color-0 class.
MinimumColoring minimum_zero_class_coloring(const Multipole& g);

}  // namespace snarklab
