#include "snarklab/conjectures.hpp"

#include <algorithm>
#include <functional>

#include "snarklab/coloring.hpp"
#include "snarklab/fixtures.hpp"
#include "snarklab/structure.hpp"

namespace snarklab {

namespace {

std::vector<std::vector<int>> neighbor_lists(const Multipole& g) {
  std::vector<std::vector<int>> adj(g.order());
  for (const Edge& e : g.edges()) {
    if (!e.is_proper() || e.is_loop()) continue;
    adj[e.a.vertex].push_back(e.b.vertex);
    adj[e.b.vertex].push_back(e.a.vertex);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

// Hamiltonian circuit of the subgraph induced by the sorted vertex set, as a
// vertex sequence, or empty.
std::vector<int> hamiltonian_circuit_of(const std::vector<std::vector<int>>& adj,
                                        const std::vector<int>& keep) {
  if (keep.size() < 3) return {};
  std::vector<char> in_keep(adj.size(), 0);
  for (int v : keep) in_keep[v] = 1;
  for (int v : keep) {
    int deg = 0;
    for (int w : adj[v]) deg += in_keep[w];
    if (deg < 2) return {};
  }
  int start = keep.front();
  std::vector<int> path{start};
  std::vector<char> used(adj.size(), 0);
  used[start] = 1;
  std::vector<int> found;
  std::function<void()> rec = [&]() {
    if (!found.empty()) return;
    int v = path.back();
    if (path.size() == keep.size()) {
      if (std::binary_search(adj[v].begin(), adj[v].end(), start)) found = path;
      return;
    }
    for (int w : adj[v]) {
      if (!in_keep[w] || used[w]) continue;
      used[w] = 1;
      path.push_back(w);
      rec();
      path.pop_back();
      used[w] = 0;
      if (!found.empty()) return;
    }
  };
  rec();
  return found;
}

}  // namespace

DominatingCircuitResult has_dominating_circuit(const Multipole& g) {
  if (!g.is_graph() || !g.is_cubic()) throw Error(Err::NotCubic, "dominating circuit needs a cubic graph");
  if (!g.is_connected()) throw Error(Err::Disconnected, "dominating circuit needs a connected graph");
  auto adj = neighbor_lists(g);
  int n = g.order();
  DominatingCircuitResult out;
  // vertices off the circuit must form an independent set; try small ones first
  for (int off = 0; off <= n - 3 && !out.holds; ++off) {
    std::vector<int> chosen;
    std::function<void(int)> rec = [&](int from) {
      if (out.holds) return;
      if (static_cast<int>(chosen.size()) == off) {
        std::vector<char> removed(n, 0);
        for (int v : chosen) removed[v] = 1;
        std::vector<int> keep;
        for (int v = 0; v < n; ++v)
          if (!removed[v]) keep.push_back(v);
        auto circuit = hamiltonian_circuit_of(adj, keep);
        if (!circuit.empty()) {
          out.holds = true;
          out.circuit = circuit;
        }
        return;
      }
      for (int v = from; v < n; ++v) {
        bool indep = std::none_of(chosen.begin(), chosen.end(), [&](int w) {
          return std::binary_search(adj[v].begin(), adj[v].end(), w);
        });
        if (!indep) continue;
        chosen.push_back(v);
        rec(v + 1);
        chosen.pop_back();
        if (out.holds) return;
      }
    };
    rec(0);
  }
  return out;
}

bool verify_dominating_circuit(const Multipole& g, const std::vector<int>& circuit) {
  if (circuit.size() < 3) return false;
  auto adj = neighbor_lists(g);
  std::vector<char> on(g.order(), 0);
  for (size_t i = 0; i < circuit.size(); ++i) {
    int v = circuit[i];
    if (v < 0 || v >= g.order() || on[v]) return false;
    on[v] = 1;
    int w = circuit[(i + 1) % circuit.size()];
    if (!std::binary_search(adj[v].begin(), adj[v].end(), w)) return false;
  }
  for (const Edge& e : g.edges()) {
    if (!e.is_proper()) continue;
    if (!on[e.a.vertex] && !on[e.b.vertex]) return false;
  }
  return true;
}

TotalColoringResult total_chromatic_number(const Multipole& g) {
  if (!g.is_graph() || !g.is_simple()) throw Error(Err::NotSimple, "total coloring needs a simple graph");
  int n = g.order(), m = g.edge_count();
  // elements: vertex v -> v, edge e -> n + e, ordered so every element touches
  // an earlier one (good propagation)
  std::vector<int> order;
  std::vector<char> placed(n + m, 0);
  std::vector<std::vector<int>> vedges(n);
  for (int e = 0; e < m; ++e) {
    vedges[g.edge(e).a.vertex].push_back(e);
    if (!g.edge(e).is_loop()) vedges[g.edge(e).b.vertex].push_back(e);
  }
  for (int s = 0; s < n; ++s) {
    if (placed[s]) continue;
    std::vector<int> queue{s};
    placed[s] = 1;
    order.push_back(s);
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      for (int e : vedges[v]) {
        if (!placed[n + e]) {
          placed[n + e] = 1;
          order.push_back(n + e);
        }
        int w = g.edge(e).a.vertex == v ? g.edge(e).b.vertex : g.edge(e).a.vertex;
        if (!placed[w]) {
          placed[w] = 1;
          order.push_back(w);
          queue.push_back(w);
        }
      }
    }
  }

  std::vector<int> color(n + m, -1);
  auto conflicts = [&](int elem, int c) {
    if (elem < n) {
      int v = elem;
      for (int e : vedges[v]) {
        if (color[n + e] == c) return true;
        int w = g.edge(e).a.vertex == v ? g.edge(e).b.vertex : g.edge(e).a.vertex;
        if (color[w] == c) return true;
      }
    } else {
      int e = elem - n;
      for (int v : {g.edge(e).a.vertex, g.edge(e).b.vertex}) {
        if (color[v] == c) return true;
        for (int f : vedges[v])
          if (f != e && color[n + f] == c) return true;
      }
    }
    return false;
  };
  std::function<bool(size_t)> rec = [&](size_t i) {
    if (i == order.size()) return true;
    int elem = order[i];
    for (int c = 0; c < 4; ++c) {
      if (conflicts(elem, c)) continue;
      color[elem] = c;
      if (rec(i + 1)) return true;
      color[elem] = -1;
    }
    return false;
  };

  TotalColoringResult out;
  if (rec(0)) {
    out.number = 4;
    out.vertex_color.assign(color.begin(), color.begin() + n);
    out.edge_color.assign(color.begin() + n, color.end());
  } else {
    // cubic graphs never need more than 5 colors (Rosenfeld)
    out.number = 5;
  }
  return out;
}

bool verify_total_coloring(const Multipole& g, const std::vector<int>& vertex_color,
                           const std::vector<int>& edge_color, int colors) {
  int n = g.order(), m = g.edge_count();
  if (static_cast<int>(vertex_color.size()) != n || static_cast<int>(edge_color.size()) != m)
    return false;
  for (int c : vertex_color)
    if (c < 0 || c >= colors) return false;
  for (int c : edge_color)
    if (c < 0 || c >= colors) return false;
  for (int e = 0; e < m; ++e) {
    const Edge& edge = g.edge(e);
    if (!edge.is_proper()) return false;
    if (vertex_color[edge.a.vertex] == vertex_color[edge.b.vertex]) return false;
    if (edge_color[e] == vertex_color[edge.a.vertex] || edge_color[e] == vertex_color[edge.b.vertex])
      return false;
    for (int f = e + 1; f < m; ++f) {
      const Edge& other = g.edge(f);
      bool adjacent = edge.a.vertex == other.a.vertex || edge.a.vertex == other.b.vertex ||
                      edge.b.vertex == other.a.vertex || edge.b.vertex == other.b.vertex;
      if (adjacent && edge_color[e] == edge_color[f]) return false;
    }
  }
  return true;
}

namespace {

struct PetersenTables {
  Multipole p = fixtures::petersen();
  std::array<std::array<char, 15>, 15> adjacent{};
  std::array<std::array<int, 3>, 10> star{};  // edges at each Petersen vertex

  PetersenTables() {
    for (int e = 0; e < 15; ++e)
      for (int f = 0; f < 15; ++f) {
        if (e == f) continue;
        const Edge& a = p.edge(e);
        const Edge& b = p.edge(f);
        adjacent[e][f] = a.a.vertex == b.a.vertex || a.a.vertex == b.b.vertex ||
                         a.b.vertex == b.a.vertex || a.b.vertex == b.b.vertex;
      }
    for (int v = 0; v < 10; ++v) {
      auto inc = p.incident_edges(v);
      for (int k = 0; k < 3; ++k) star[v][k] = inc[k];
    }
  }
};

const PetersenTables& petersen_tables() {
  static PetersenTables t;
  return t;
}

}  // namespace

PetersenColoringResult has_petersen_coloring(const Multipole& g) {
  if (!g.is_graph() || !g.is_cubic()) throw Error(Err::NotCubic, "Petersen coloring needs a cubic graph");
  if (!bridges(g).empty())
    throw Error(Err::BridgePresent, "the conjecture covers bridgeless cubic graphs");
  const PetersenTables& pt = petersen_tables();
  int m = g.edge_count();
  PetersenColoringResult out;

  if (auto c = three_edge_coloring(g)) {
    // map color class i to the i-th edge of a fixed Petersen vertex star
    out.holds = true;
    out.edge_map.resize(m);
    for (int e = 0; e < m; ++e) out.edge_map[e] = pt.star[0][c->color[e] - 1];
    return out;
  }

  // edge order where each edge shares a vertex with an earlier one
  std::vector<int> order;
  std::vector<char> placed(m, 0);
  std::vector<std::vector<int>> vedges(g.order());
  for (int e = 0; e < m; ++e) {
    vedges[g.edge(e).a.vertex].push_back(e);
    vedges[g.edge(e).b.vertex].push_back(e);
  }
  std::vector<char> vseen(g.order(), 0);
  std::vector<int> queue;
  for (int s = 0; s < g.order(); ++s) {
    if (vseen[s]) continue;
    vseen[s] = 1;
    queue.push_back(s);
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      for (int e : vedges[v]) {
        if (!placed[e]) {
          placed[e] = 1;
          order.push_back(e);
        }
        int w = g.edge(e).a.vertex == v ? g.edge(e).b.vertex : g.edge(e).a.vertex;
        if (!vseen[w]) {
          vseen[w] = 1;
          queue.push_back(w);
        }
      }
    }
  }

  std::vector<int> phi(m, -1);
  // Petersen is triangle-free, so "three mutually adjacent images" reduces to
  // a pairwise constraint between edges sharing a vertex
  auto compatible = [&](int e, int img) {
    for (int v : {g.edge(e).a.vertex, g.edge(e).b.vertex})
      for (int f : vedges[v]) {
        if (f == e || phi[f] < 0) continue;
        if (phi[f] == img || !pt.adjacent[img][phi[f]]) return false;
      }
    return true;
  };
  std::function<bool(size_t)> rec = [&](size_t i) {
    if (i == order.size()) return true;
    int e = order[i];
    for (int img = 0; img < 15; ++img) {
      if (!compatible(e, img)) continue;
      phi[e] = img;
      if (rec(i + 1)) return true;
      phi[e] = -1;
    }
    return false;
  };
  if (rec(0)) {
    out.holds = true;
    out.edge_map = phi;
  }
  return out;
}

bool verify_petersen_coloring(const Multipole& g, const std::vector<int>& edge_map) {
  if (static_cast<int>(edge_map.size()) != g.edge_count()) return false;
  for (int img : edge_map)
    if (img < 0 || img >= 15) return false;
  const PetersenTables& pt = petersen_tables();
  for (int v = 0; v < g.order(); ++v) {
    auto inc = g.incident_edges(v);
    if (inc.size() != 3) return false;
    for (size_t i = 0; i < inc.size(); ++i)
      for (size_t j = i + 1; j < inc.size(); ++j) {
        int a = edge_map[inc[i]], b = edge_map[inc[j]];
        if (a == b || !pt.adjacent[a][b]) return false;
      }
  }
  return true;
}

}  // namespace snarklab
