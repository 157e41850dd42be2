#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "snarklab/coloring.hpp"
#include "snarklab/multipole.hpp"
#include "snarklab/structure.hpp"

namespace snarklab {

/// Unique snark extension of a colour-open 4-pole: heterochromatic poles close
/// up by joining the semiedges within each couple (no new vertices);
/// isochromatic poles attach each couple to one of two new adjacent vertices.
Multipole extend_colour_open(const Multipole& m);

/// Extension of a 4-pole by two adjacent vertices, choosing among the three
/// attachment pairings the first whose result is cyclically 4-edge-connected.
Multipole extend_with_two_vertices(const Multipole& fragment);

enum class DecompositionLabel {
  BothUncolourable,
  UncolourableHeterochromatic,
  UncolourableIsochromatic,
  BothColourable,
};

struct FragmentExtension {
  PoleClassification classification;
  Multipole extension;
  int added_vertices = 0;
  int zeta = 0;
  bool zeta_capped = false;
  bool extension_colorable = false;
};

struct DecompositionCase {
  CutReport cut;
  FragmentExtension left, right;
  DecompositionLabel label = DecompositionLabel::BothColourable;
  /// Oddness of the whole graph, computed when both fragments are colorable
  /// and the graph is bridgeless; must then be at most 2.
  std::optional<int> omega;
};

/// Split g along a cycle-separating 4-edge-cut and extend each fragment
/// according to its coloring class.
DecompositionCase decompose_along_cut(const Multipole& g, const std::vector<int>& cut_edges);

struct JoinSpec {
  enum class Mode { Vertices, Edges };
  Mode left_mode = Mode::Vertices;
  Mode right_mode = Mode::Vertices;
  std::array<int, 2> left_element{};   // adjacent vertex ids or nonadjacent edge ids
  std::array<int, 2> right_element{};
  std::array<int, 4> bijection{};      // left semiedge position p joins right position bijection[p]
};

struct FourJoinOptions {
  bool orbit_pruning = true;
  bool dedupe = true;
  int max_order = kMaxVertices;
};

struct FourJoinStats {
  long long joins_enumerated = 0;
  long long simple_outputs = 0;  // simple connected results within the order bound, before dedupe
};

using FourJoinSink =
    std::function<void(const Multipole&, const JoinSpec&, const std::string& certificate)>;

/// Enumerate every 4-join of g1 and g2: extract a 4-pole from each side (two
/// adjacent vertices or two nonadjacent edges; orbit representatives when
/// pruning) and identify the dangling edges under all 24 bijections.
FourJoinStats four_join_stream(const Multipole& g1, const Multipole& g2,
                               const FourJoinOptions& options, const FourJoinSink& sink);

struct Oddness4Hit {
  std::string certificate;
  int order = 0;
  int oddness = 0;
  int zeta = 0;
};

struct PairAudit {
  std::string left, right;  // graph6 of the pool members
  long long joins_enumerated = 0;
  long long simple_outputs = 0;
  long long snarks = 0;
  long long zeta_ge_4 = 0;
  long long omega_ge_4 = 0;
  long long elapsed_ms = 0;
};

struct Oddness4Options {
  int max_order = 30;
  bool orbit_pruning = true;
  std::string audit_log_path;   // JSON lines, appended as pairs complete; empty disables
  std::string checkpoint_path;  // resume state; empty disables checkpointing
  uint64_t config_hash = 0;
};

struct Oddness4Report {
  std::vector<Oddness4Hit> hits;  // snarks with zeta >= 4 and oddness >= 4
  std::vector<PairAudit> audits;
  int pairs_total = 0;
  int pairs_resumed = 0;  // pairs skipped thanks to a checkpoint
};

/// 4-join search over all unordered pool pairs for snarks of oddness at least 4.
Oddness4Report oddness4_search(const std::vector<Multipole>& pool, const Oddness4Options& options);

}  // namespace snarklab
