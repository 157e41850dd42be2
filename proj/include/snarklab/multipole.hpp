#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace snarklab {

inline constexpr int kMaxVertices = 64;

enum class Err {
  SemiedgeCountMismatch,
  IncompletePairing,
  EmptyPairing,
  OverlappingSlots,
  FreeLoop,
  EdgeNotFound,
  EqualEdges,
  NotAnEdge,
  AdjacentEdgesInEdgeMode,
  VerticesNotAdjacent,
  MalformedHeader,
  TruncatedBitVector,
  NonSimpleGraph,
  LoopPresent,
  NotAFourPole,
  BadColorPair,
  StartNotOnChain,
  AcyclicInput,
  Disconnected,
  BridgePresent,
  HasSemiedges,
  NotColourOpen,
  NoValidPairing,
  NotCycleSeparating,
  NotAFourCut,
  NotCubic,
  NotSimple,
  OrderBoundExceeded,
  PreconditionUnverifiable,
  ConfigMismatchOnResume,
  BadInput,
};

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

/// One end of an edge: attached to a vertex, or free (a semiedge).
struct End {
  int vertex = -1;
  bool attached() const { return vertex >= 0; }
  bool operator==(const End&) const = default;
};

struct Edge {
  End a;
  End b;
  bool is_proper() const { return a.attached() && b.attached(); }
  bool is_dangling() const { return a.attached() != b.attached(); }
  bool is_isolated() const { return !a.attached() && !b.attached(); }
  bool is_loop() const { return a.attached() && b.attached() && a.vertex == b.vertex; }
  bool operator==(const Edge&) const = default;
};

/// Position of a free end inside a multipole: edge index plus side (0 = a, 1 = b).
struct SemiedgeRef {
  int edge = -1;
  int side = 0;
  bool operator==(const SemiedgeRef&) const = default;
};

struct ValidationReport {
  bool cubic = false;
  bool simple = false;
  bool loop_free = false;
  bool connected = false;
  int semiedge_count = 0;
  std::vector<std::string> problems;
  bool valid() const { return problems.empty(); }
};

/// A cubic multipole: vertices 0..n-1, edges whose ends are vertex attachments
/// or semiedges, and a fixed ordering of all semiedges. Immutable after
/// construction; all structural operations return new values.
class Multipole {
 public:
  Multipole() = default;
  Multipole(int vertex_count, std::vector<Edge> edges, std::vector<SemiedgeRef> semiedge_order);

  /// Closed simple-graph constructor from an adjacency pair list.
  static Multipole graph(int vertex_count, const std::vector<std::pair<int, int>>& edges);

  int order() const { return vertex_count_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int id) const { return edges_.at(static_cast<size_t>(id)); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<SemiedgeRef>& semiedge_order() const { return semiedge_order_; }
  int pole_count() const { return static_cast<int>(semiedge_order_.size()); }
  bool is_graph() const { return semiedge_order_.empty(); }

  /// Number of edge-ends attached to v.
  int degree(int v) const;
  /// Edge ids with at least one end at v (a loop appears once).
  std::vector<int> incident_edges(int v) const;
  /// Edge id joining u and v among proper edges, or -1.
  int find_edge(int u, int v) const;
  bool adjacent(int u, int v) const { return find_edge(u, v) >= 0; }
  bool has_loop() const;
  /// True when no loops and no parallel proper edges.
  bool is_simple() const;
  bool is_cubic() const;
  /// Connectivity over vertices and edges (an isolated edge is its own component).
  bool is_connected() const;
  int proper_edge_count() const;

  /// Adjacency rows as 64-bit masks. Requires a loop-free graph (semiedges ignored,
  /// parallel edges collapse).
  std::array<uint64_t, kMaxVertices> adjacency_rows() const;

  bool same_labeled_graph(const Multipole& other) const;

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<SemiedgeRef> semiedge_order_;
};

struct JunctionPairing {
  /// (position in m's semiedge order, position in n's semiedge order)
  std::vector<std::pair<int, int>> pairs;
};

ValidationReport validate_multipole(const Multipole& m);

/// Join all semiedges of two k-poles pairwise; the result is a graph.
Multipole complete_junction(const Multipole& m, const Multipole& n, const JunctionPairing& pairing);

/// Join a proper nonempty subset of semiedges; unmatched semiedges of m keep
/// their order and precede those of n.
Multipole partial_junction(const Multipole& m, const Multipole& n, const JunctionPairing& pairing);

/// Join semiedges of a single multipole pairwise; pairs list positions in its
/// semiedge order. Unmatched semiedges keep their relative order.
Multipole self_junction(const Multipole& m, const std::vector<std::pair<int, int>>& position_pairs);

/// Subdivide proper edges e and f and join the two subdivision vertices.
Multipole i_extension(const Multipole& g, int e, int f);

struct AdjacentVertices {
  int u;
  int v;
};
struct NonadjacentEdges {
  int e;
  int f;
};

/// Remove two adjacent vertices (with their joining edge) and keep the four
/// liberated edge-ends as dangling edges. Semiedge order: u's non-v neighbours
/// ascending, then v's non-u neighbours ascending (neighbour ids before relabeling).
Multipole extract_four_pole(const Multipole& g, AdjacentVertices mode);

/// Sever two nonadjacent edges into four dangling edges. Semiedge order:
/// lower endpoint of the lexicographically smaller edge first, then its higher
/// endpoint, then the same for the other edge.
Multipole extract_four_pole(const Multipole& g, NonadjacentEdges mode);

/// Sever the listed proper edges; each becomes two dangling edges appended to
/// the semiedge order as (end at lower vertex, end at higher vertex) per edge,
/// in the listed edge order.
Multipole sever_edges(const Multipole& g, const std::vector<int>& edge_ids);

/// Vertex subsets of each connected component (isolated edges excluded).
std::vector<std::vector<int>> vertex_components(const Multipole& g, const std::vector<int>& removed_edges = {});

}  // namespace snarklab
