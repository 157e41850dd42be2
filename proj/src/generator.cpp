#include "snarklab/generator.hpp"

#include <algorithm>
#include <unordered_set>

#include "snarklab/canonical.hpp"
#include "snarklab/coloring.hpp"
#include "snarklab/fixtures.hpp"
#include "snarklab/graph6.hpp"
#include "snarklab/structure.hpp"

namespace snarklab {

GenerationLevel expand_level(const GenerationLevel& prev) {
  int order = prev.order + 2;
  std::unordered_set<std::string> next;
  for (const std::string& parent_cert : prev.certificates) {
    Multipole parent = graph6_decode(parent_cert);
    int m = parent.edge_count();
    auto shares = [&](int e, int f) {
      const Edge& a = parent.edge(e);
      const Edge& b = parent.edge(f);
      return a.a.vertex == b.a.vertex || a.a.vertex == b.b.vertex || a.b.vertex == b.a.vertex ||
             a.b.vertex == b.b.vertex;
    };
    for (int e = 0; e < m; ++e)
      for (int f = e + 1; f < m; ++f) {
        if (shares(e, f)) continue;
        Multipole child = i_extension(parent, e, f);
        next.insert(canonical_certificate(child).certificate);
      }
  }
  if (order == 8) next.insert(canonical_certificate(fixtures::cube_q3()).certificate);
  // nonadjacent I-extensions preserve zeta >= 4, but the emitted classes are
  // verified rather than trusted
  std::vector<std::string> kept;
  for (const std::string& cert : next) {
    Multipole g = graph6_decode(cert);
    if (g.is_simple() && g.is_cubic() && g.is_connected() && is_cyclically_k_edge_connected(g, 4))
      kept.push_back(cert);
  }
  std::sort(kept.begin(), kept.end());
  return {order, std::move(kept)};
}

std::vector<GenerationLevel> generate_c4ec_cubic(int target_order, int order_bound) {
  if (target_order < 4 || target_order % 2 != 0)
    throw Error(Err::BadInput, "target order must be even and at least 4");
  if (target_order > order_bound) throw Error(Err::OrderBoundExceeded, "target order above the configured bound");

  std::vector<GenerationLevel> levels;
  levels.push_back({4, {canonical_certificate(fixtures::k4()).certificate}});
  while (levels.back().order < target_order) levels.push_back(expand_level(levels.back()));
  return levels;
}

std::vector<std::string> filter_snarks(const std::vector<std::string>& certificates, int girth_min) {
  std::vector<std::string> out;
  for (const std::string& cert : certificates) {
    Multipole g = graph6_decode(cert);
    if (is_three_edge_colorable(g)) continue;
    if (girth_min > 0 && girth(g) < girth_min) continue;
    out.push_back(cert);
  }
  return out;
}

bool has_c4ec_reduction(const Multipole& g) {
  if (!g.is_graph() || !g.is_simple() || !g.is_cubic() || g.order() < 6) return false;
  for (int id = 0; id < g.edge_count(); ++id) {
    int u = g.edge(id).a.vertex, v = g.edge(id).b.vertex;
    // suppress u and v after deleting uv: each contributes one fused edge
    std::vector<std::pair<int, int>> pairs;
    bool ok = true;
    for (int w : {u, v}) {
      std::vector<int> others;
      for (int e : g.incident_edges(w)) {
        if (e == id) continue;
        const Edge& edge = g.edge(e);
        others.push_back(edge.a.vertex == w ? edge.b.vertex : edge.a.vertex);
      }
      if (others.size() != 2 || others[0] == others[1] || others[0] == u || others[0] == v ||
          others[1] == u || others[1] == v) {
        ok = false;
        break;
      }
      pairs.push_back({others[0], others[1]});
    }
    if (!ok) continue;
    std::vector<int> relabel(g.order(), -1);
    int next = 0;
    for (int w = 0; w < g.order(); ++w)
      if (w != u && w != v) relabel[w] = next++;
    std::vector<std::pair<int, int>> edges;
    for (int e = 0; e < g.edge_count(); ++e) {
      const Edge& edge = g.edge(e);
      if (e == id || edge.a.vertex == u || edge.a.vertex == v || edge.b.vertex == u ||
          edge.b.vertex == v)
        continue;
      edges.push_back({relabel[edge.a.vertex], relabel[edge.b.vertex]});
    }
    for (auto [a, b] : pairs) edges.push_back({relabel[a], relabel[b]});
    Multipole reduced = Multipole::graph(g.order() - 2, edges);
    if (reduced.is_simple() && reduced.is_cubic() && reduced.is_connected() &&
        is_cyclically_k_edge_connected(reduced, 4))
      return true;
  }
  return false;
}

}  // namespace snarklab
