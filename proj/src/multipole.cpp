#include "snarklab/multipole.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace snarklab {

Multipole::Multipole(int vertex_count, std::vector<Edge> edges, std::vector<SemiedgeRef> semiedge_order)
    : vertex_count_(vertex_count), edges_(std::move(edges)), semiedge_order_(std::move(semiedge_order)) {
  if (vertex_count_ < 0 || vertex_count_ > kMaxVertices)
    throw Error(Err::BadInput, "vertex count out of range");
  for (const Edge& e : edges_) {
    for (const End* end : {&e.a, &e.b})
      if (end->attached() && end->vertex >= vertex_count_)
        throw Error(Err::BadInput, "edge end references unknown vertex");
  }
  // semiedge_order must list every free end exactly once
  std::set<std::pair<int, int>> seen;
  for (const SemiedgeRef& s : semiedge_order_) {
    if (s.edge < 0 || s.edge >= static_cast<int>(edges_.size()))
      throw Error(Err::BadInput, "semiedge ref out of range");
    const End& end = s.side == 0 ? edges_[s.edge].a : edges_[s.edge].b;
    if (end.attached()) throw Error(Err::BadInput, "semiedge ref points at an attached end");
    if (!seen.insert({s.edge, s.side}).second)
      throw Error(Err::BadInput, "duplicate semiedge ref");
  }
  int free_ends = 0;
  for (const Edge& e : edges_) free_ends += (!e.a.attached()) + (!e.b.attached());
  if (free_ends != static_cast<int>(semiedge_order_.size()))
    throw Error(Err::BadInput, "semiedge order does not cover all free ends");
}

Multipole Multipole::graph(int vertex_count, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [u, v] : pairs) edges.push_back(Edge{End{u}, End{v}});
  return Multipole(vertex_count, std::move(edges), {});
}

int Multipole::degree(int v) const {
  int d = 0;
  for (const Edge& e : edges_) d += (e.a.vertex == v) + (e.b.vertex == v);
  return d;
}

std::vector<int> Multipole::incident_edges(int v) const {
  std::vector<int> out;
  for (int i = 0; i < edge_count(); ++i)
    if (edges_[i].a.vertex == v || edges_[i].b.vertex == v) out.push_back(i);
  return out;
}

int Multipole::find_edge(int u, int v) const {
  for (int i = 0; i < edge_count(); ++i) {
    const Edge& e = edges_[i];
    if (!e.is_proper()) continue;
    if ((e.a.vertex == u && e.b.vertex == v) || (e.a.vertex == v && e.b.vertex == u)) return i;
  }
  return -1;
}

bool Multipole::has_loop() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_loop(); });
}

bool Multipole::is_simple() const {
  if (has_loop()) return false;
  std::set<std::pair<int, int>> seen;
  for (const Edge& e : edges_) {
    if (!e.is_proper()) continue;
    auto key = std::minmax(e.a.vertex, e.b.vertex);
    if (!seen.insert(key).second) return false;
  }
  return true;
}

bool Multipole::is_cubic() const {
  for (int v = 0; v < vertex_count_; ++v)
    if (degree(v) != 3) return false;
  return true;
}

bool Multipole::is_connected() const {
  int parts = 0;
  // isolated edges are components of their own
  for (const Edge& e : edges_)
    if (e.is_isolated()) ++parts;
  auto comps = vertex_components(*this);
  parts += static_cast<int>(comps.size());
  return parts <= 1;
}

int Multipole::proper_edge_count() const {
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_proper(); }));
}

std::array<uint64_t, kMaxVertices> Multipole::adjacency_rows() const {
  std::array<uint64_t, kMaxVertices> rows{};
  for (const Edge& e : edges_) {
    if (!e.is_proper() || e.is_loop()) continue;
    rows[e.a.vertex] |= uint64_t{1} << e.b.vertex;
    rows[e.b.vertex] |= uint64_t{1} << e.a.vertex;
  }
  return rows;
}

bool Multipole::same_labeled_graph(const Multipole& other) const {
  if (vertex_count_ != other.vertex_count_) return false;
  return adjacency_rows() == other.adjacency_rows();
}

std::vector<std::vector<int>> vertex_components(const Multipole& g, const std::vector<int>& removed_edges) {
  std::vector<char> removed(g.edge_count(), 0);
  for (int e : removed_edges) removed[e] = 1;
  std::vector<std::vector<int>> adj(g.order());
  for (int i = 0; i < g.edge_count(); ++i) {
    if (removed[i]) continue;
    const Edge& e = g.edge(i);
    if (!e.is_proper() || e.is_loop()) continue;
    adj[e.a.vertex].push_back(e.b.vertex);
    adj[e.b.vertex].push_back(e.a.vertex);
  }
  std::vector<char> seen(g.order(), 0);
  std::vector<std::vector<int>> comps;
  for (int s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp, stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w : adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

ValidationReport validate_multipole(const Multipole& m) {
  ValidationReport r;
  r.semiedge_count = m.pole_count();
  r.cubic = m.is_cubic();
  r.loop_free = !m.has_loop();
  r.simple = m.is_simple();
  r.connected = m.is_connected();
  if (!r.cubic) r.problems.push_back("not cubic: some vertex lacks exactly 3 edge-ends");
  return r;
}

namespace {

// Joining semiedges fuses chains of edges into single edges. Each pairing
// identifies two free ends; walking the resulting chains yields the surviving
// edges and the relocation of every unmatched free end.
struct ChainFuser {
  struct Slot {
    int mate_edge = -1;  // pairing partner, -1 if unmatched
    int mate_side = -1;
  };
  const std::vector<Edge>& edges;
  std::vector<std::array<Slot, 2>> slots;

  explicit ChainFuser(const std::vector<Edge>& e) : edges(e), slots(e.size()) {}

  void pair(int e1, int s1, int e2, int s2) {
    if (slots[e1][s1].mate_edge >= 0 || slots[e2][s2].mate_edge >= 0)
      throw Error(Err::OverlappingSlots, "semiedge joined twice");
    slots[e1][s1] = {e2, s2};
    slots[e2][s2] = {e1, s1};
  }

  // Produces the fused edge list and a map (old edge, side) -> (new edge, side)
  // for ends that survive (attached ends and unmatched free ends).
  void run(std::vector<Edge>& out, std::map<std::pair<int, int>, std::pair<int, int>>& end_map) {
    std::vector<char> done(edges.size(), 0);
    for (size_t e = 0; e < edges.size(); ++e) {
      if (done[e]) continue;
      // find a chain extremity: a side that is not paired
      int start_edge = -1, start_side = -1;
      {
        int ce = static_cast<int>(e), cs = 0;
        // walk side 0 direction until extremity or loop back
        int guard = 0;
        while (true) {
          const auto& mate = slots[ce][cs];
          if (mate.mate_edge < 0) {
            start_edge = ce;
            start_side = cs;
            break;
          }
          int ne = mate.mate_edge, ns = mate.mate_side;
          ce = ne;
          cs = 1 - ns;  // continue out of the other side
          if (ce == static_cast<int>(e) && cs == 0) break;  // closed chain
          if (++guard > static_cast<int>(2 * edges.size()))
            throw Error(Err::BadInput, "pairing walk failed");
        }
      }
      if (start_edge < 0) throw Error(Err::FreeLoop, "junction creates a vertex-free closed chain");
      // walk from the extremity to the other end
      End first = start_side == 0 ? edges[start_edge].a : edges[start_edge].b;
      int ce = start_edge, cs = 1 - start_side;
      std::pair<int, int> first_ref{start_edge, start_side};
      while (true) {
        done[ce] = 1;
        const auto& mate = slots[ce][cs];
        if (mate.mate_edge < 0) break;
        int ne = mate.mate_edge, ns = mate.mate_side;
        ce = ne;
        cs = 1 - ns;
      }
      End last = cs == 0 ? edges[ce].a : edges[ce].b;
      int new_id = static_cast<int>(out.size());
      out.push_back(Edge{first, last});
      end_map[first_ref] = {new_id, 0};
      end_map[{ce, cs}] = {new_id, 1};
    }
  }
};

Multipole junction(const Multipole& m, const Multipole& n, const JunctionPairing& pairing, bool complete) {
  if (complete) {
    if (m.pole_count() != n.pole_count())
      throw Error(Err::SemiedgeCountMismatch, "complete junction needs equal semiedge counts");
    if (static_cast<int>(pairing.pairs.size()) != m.pole_count())
      throw Error(Err::IncompletePairing, "complete junction must pair all semiedges");
  } else {
    if (pairing.pairs.empty()) throw Error(Err::EmptyPairing, "partial junction needs at least one pair");
    if (static_cast<int>(pairing.pairs.size()) >= m.pole_count() ||
        static_cast<int>(pairing.pairs.size()) >= n.pole_count())
      throw Error(Err::BadInput, "partial junction must leave semiedges on both sides");
  }
  // combine: m's vertices first, then n's; same for edges
  std::vector<Edge> all = m.edges();
  int edge_off = m.edge_count();
  for (Edge e : n.edges()) {
    if (e.a.attached()) e.a.vertex += m.order();
    if (e.b.attached()) e.b.vertex += m.order();
    all.push_back(e);
  }
  ChainFuser fuser(all);
  std::vector<char> m_used(m.pole_count(), 0), n_used(n.pole_count(), 0);
  for (auto [pm, pn] : pairing.pairs) {
    if (pm < 0 || pm >= m.pole_count() || pn < 0 || pn >= n.pole_count())
      throw Error(Err::BadInput, "pairing position out of range");
    if (m_used[pm] || n_used[pn]) throw Error(Err::OverlappingSlots, "pairing reuses a semiedge");
    m_used[pm] = n_used[pn] = 1;
    SemiedgeRef sm = m.semiedge_order()[pm];
    SemiedgeRef sn = n.semiedge_order()[pn];
    fuser.pair(sm.edge, sm.side, sn.edge + edge_off, sn.side);
  }
  std::vector<Edge> fused;
  std::map<std::pair<int, int>, std::pair<int, int>> end_map;
  fuser.run(fused, end_map);

  std::vector<SemiedgeRef> order;
  for (int i = 0; i < m.pole_count(); ++i) {
    if (m_used[i]) continue;
    SemiedgeRef s = m.semiedge_order()[i];
    auto [e2, s2] = end_map.at({s.edge, s.side});
    order.push_back(SemiedgeRef{e2, s2});
  }
  for (int i = 0; i < n.pole_count(); ++i) {
    if (n_used[i]) continue;
    SemiedgeRef s = n.semiedge_order()[i];
    auto [e2, s2] = end_map.at({s.edge + edge_off, s.side});
    order.push_back(SemiedgeRef{e2, s2});
  }
  return Multipole(m.order() + n.order(), std::move(fused), std::move(order));
}

}  // namespace

Multipole complete_junction(const Multipole& m, const Multipole& n, const JunctionPairing& pairing) {
  return junction(m, n, pairing, true);
}

Multipole partial_junction(const Multipole& m, const Multipole& n, const JunctionPairing& pairing) {
  return junction(m, n, pairing, false);
}

Multipole self_junction(const Multipole& m, const std::vector<std::pair<int, int>>& position_pairs) {
  if (position_pairs.empty()) throw Error(Err::EmptyPairing, "self_junction needs at least one pair");
  ChainFuser fuser(m.edges());
  std::vector<char> used(m.pole_count(), 0);
  for (auto [p, q] : position_pairs) {
    if (p < 0 || q < 0 || p >= m.pole_count() || q >= m.pole_count() || p == q)
      throw Error(Err::BadInput, "pairing position out of range");
    if (used[p] || used[q]) throw Error(Err::OverlappingSlots, "pairing reuses a semiedge");
    used[p] = used[q] = 1;
    SemiedgeRef sp = m.semiedge_order()[p];
    SemiedgeRef sq = m.semiedge_order()[q];
    fuser.pair(sp.edge, sp.side, sq.edge, sq.side);
  }
  std::vector<Edge> fused;
  std::map<std::pair<int, int>, std::pair<int, int>> end_map;
  fuser.run(fused, end_map);
  std::vector<SemiedgeRef> order;
  for (int i = 0; i < m.pole_count(); ++i) {
    if (used[i]) continue;
    SemiedgeRef s = m.semiedge_order()[i];
    auto [e2, s2] = end_map.at({s.edge, s.side});
    order.push_back(SemiedgeRef{e2, s2});
  }
  return Multipole(m.order(), std::move(fused), std::move(order));
}

Multipole i_extension(const Multipole& g, int e, int f) {
  if (e == f) throw Error(Err::EqualEdges, "i_extension needs two distinct edges");
  if (e < 0 || e >= g.edge_count() || f < 0 || f >= g.edge_count())
    throw Error(Err::EdgeNotFound, "edge id out of range");
  if (!g.edge(e).is_proper() || !g.edge(f).is_proper())
    throw Error(Err::EdgeNotFound, "i_extension requires proper edges");
  int ve = g.order(), vf = g.order() + 1;
  std::vector<Edge> edges;
  for (int i = 0; i < g.edge_count(); ++i) {
    if (i == e) {
      edges.push_back(Edge{g.edge(i).a, End{ve}});
      edges.push_back(Edge{End{ve}, g.edge(i).b});
    } else if (i == f) {
      edges.push_back(Edge{g.edge(i).a, End{vf}});
      edges.push_back(Edge{End{vf}, g.edge(i).b});
    } else {
      edges.push_back(g.edge(i));
    }
  }
  edges.push_back(Edge{End{ve}, End{vf}});
  // semiedge order carries over; refs shift because e and f each split in two
  std::vector<SemiedgeRef> order;
  for (SemiedgeRef s : g.semiedge_order()) {
    int id = s.edge;
    int lo = std::min(e, f), hi = std::max(e, f);
    int shifted;
    if (id < lo)
      shifted = id;
    else if (id == lo)
      shifted = s.side == 0 ? id : id + 1;
    else if (id < hi)
      shifted = id + 1;
    else if (id == hi)
      shifted = s.side == 0 ? id + 1 : id + 2;
    else
      shifted = id + 2;
    int new_side = (id == lo || id == hi) ? (s.side == 0 ? 0 : 1) : s.side;
    order.push_back(SemiedgeRef{shifted, new_side});
  }
  return Multipole(g.order() + 2, std::move(edges), std::move(order));
}

Multipole extract_four_pole(const Multipole& g, AdjacentVertices mode) {
  int u = mode.u, v = mode.v;
  if (u == v || u < 0 || v < 0 || u >= g.order() || v >= g.order())
    throw Error(Err::BadInput, "bad vertex ids");
  int uv = g.find_edge(u, v);
  if (uv < 0) throw Error(Err::NotAnEdge, "vertices are not adjacent");
  if (!g.is_graph() || !g.is_simple()) throw Error(Err::NotSimple, "extract_four_pole needs a simple graph");

  // relabel remaining vertices, preserving relative order
  std::vector<int> relabel(g.order(), -1);
  int next = 0;
  for (int w = 0; w < g.order(); ++w)
    if (w != u && w != v) relabel[w] = next++;

  struct Pending {
    int anchor_old;  // old id of the surviving endpoint
    int owner;       // 0: u-side, 1: v-side
  };
  std::vector<Edge> edges;
  std::vector<Pending> pend_refs;
  std::vector<int> pend_edge_ids;
  for (int i = 0; i < g.edge_count(); ++i) {
    if (i == uv) continue;
    Edge e = g.edge(i);
    bool touches_u = (e.a.vertex == u || e.b.vertex == u);
    bool touches_v = (e.a.vertex == v || e.b.vertex == v);
    if (touches_u || touches_v) {
      int gone = touches_u ? u : v;
      End other = (e.a.vertex == gone) ? e.b : e.a;
      if (!other.attached()) throw Error(Err::BadInput, "removed vertex carries a dangling edge");
      pend_refs.push_back(Pending{other.vertex, touches_u ? 0 : 1});
      pend_edge_ids.push_back(static_cast<int>(edges.size()));
      edges.push_back(Edge{End{relabel[other.vertex]}, End{}});
    } else {
      if (e.a.attached()) e.a.vertex = relabel[e.a.vertex];
      if (e.b.attached()) e.b.vertex = relabel[e.b.vertex];
      edges.push_back(e);
    }
  }
  if (pend_refs.size() != 4) throw Error(Err::NotCubic, "expected exactly four liberated edge-ends");
  // order: u's two non-v neighbours ascending, then v's two non-u neighbours ascending
  std::vector<int> idx(4);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int x, int y) {
    if (pend_refs[x].owner != pend_refs[y].owner) return pend_refs[x].owner < pend_refs[y].owner;
    return pend_refs[x].anchor_old < pend_refs[y].anchor_old;
  });
  std::vector<SemiedgeRef> order;
  for (int k : idx) order.push_back(SemiedgeRef{pend_edge_ids[k], 1});
  // carry over any pre-existing semiedges of g after the four new ones
  for (SemiedgeRef s : g.semiedge_order()) {
    // g is a closed graph here, so there are none; kept for clarity
    (void)s;
  }
  return Multipole(g.order() - 2, std::move(edges), std::move(order));
}

Multipole extract_four_pole(const Multipole& g, NonadjacentEdges mode) {
  int e = mode.e, f = mode.f;
  if (e == f) throw Error(Err::EqualEdges, "edges must differ");
  if (e < 0 || f < 0 || e >= g.edge_count() || f >= g.edge_count())
    throw Error(Err::EdgeNotFound, "edge id out of range");
  if (!g.edge(e).is_proper() || !g.edge(f).is_proper()) throw Error(Err::NotAnEdge, "edges must be proper");
  auto shares = [&](int x, int y) {
    const Edge& a = g.edge(x);
    const Edge& b = g.edge(y);
    return a.a.vertex == b.a.vertex || a.a.vertex == b.b.vertex || a.b.vertex == b.a.vertex ||
           a.b.vertex == b.b.vertex;
  };
  if (shares(e, f)) throw Error(Err::AdjacentEdgesInEdgeMode, "edges share a vertex");
  if (!g.is_graph() || !g.is_simple()) throw Error(Err::NotSimple, "extract_four_pole needs a simple graph");
  auto key = [&](int id) {
    return std::minmax(g.edge(id).a.vertex, g.edge(id).b.vertex);
  };
  int first = e, second = f;
  if (key(f) < key(e)) std::swap(first, second);
  return sever_edges(g, {first, second});
}

Multipole sever_edges(const Multipole& g, const std::vector<int>& edge_ids) {
  std::vector<char> cut(g.edge_count(), 0);
  for (int id : edge_ids) {
    if (id < 0 || id >= g.edge_count()) throw Error(Err::EdgeNotFound, "edge id out of range");
    if (!g.edge(id).is_proper()) throw Error(Err::NotAnEdge, "can only sever proper edges");
    if (cut[id]) throw Error(Err::BadInput, "duplicate edge in sever list");
    cut[id] = 1;
  }
  std::vector<Edge> edges;
  std::vector<int> new_id(g.edge_count(), -1);
  // surviving edges first, preserving order
  for (int i = 0; i < g.edge_count(); ++i) {
    if (cut[i]) continue;
    new_id[i] = static_cast<int>(edges.size());
    edges.push_back(g.edge(i));
  }
  std::vector<SemiedgeRef> order;
  for (SemiedgeRef s : g.semiedge_order()) order.push_back(SemiedgeRef{new_id[s.edge], s.side});
  for (int id : edge_ids) {
    int lo = std::min(g.edge(id).a.vertex, g.edge(id).b.vertex);
    int hi = std::max(g.edge(id).a.vertex, g.edge(id).b.vertex);
    order.push_back(SemiedgeRef{static_cast<int>(edges.size()), 1});
    edges.push_back(Edge{End{lo}, End{}});
    order.push_back(SemiedgeRef{static_cast<int>(edges.size()), 1});
    edges.push_back(Edge{End{hi}, End{}});
  }
  return Multipole(g.order(), std::move(edges), std::move(order));
}

}  // namespace snarklab
