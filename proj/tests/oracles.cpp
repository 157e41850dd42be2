#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "snarklab/canonical.hpp"

namespace snarklab::oracles {

namespace {

bool assignment_proper(const Multipole& m, const std::vector<int>& color) {
  for (int v = 0; v < m.order(); ++v) {
    auto inc = m.incident_edges(v);
    for (size_t i = 0; i < inc.size(); ++i)
      for (size_t j = i + 1; j < inc.size(); ++j)
        if (color[inc[i]] == color[inc[j]]) return false;
    // a loop at v conflicts with itself
    for (int e : inc)
      if (m.edge(e).is_loop()) return false;
  }
  return true;
}

template <typename Fn>
void for_each_assignment(int m, Fn&& fn) {
  std::vector<int> color(m, 1);
  while (true) {
    fn(color);
    int i = 0;
    while (i < m && color[i] == 3) color[i++] = 1;
    if (i == m) break;
    ++color[i];
  }
}

}  // namespace

bool colorable_naive(const Multipole& m) {
  if (m.edge_count() == 0) return true;
  bool found = false;
  for_each_assignment(m.edge_count(), [&](const std::vector<int>& color) {
    if (!found && assignment_proper(m, color)) found = true;
  });
  return found;
}

std::set<std::vector<int>> boundary_colorings_naive(const Multipole& m) {
  std::set<std::vector<int>> out;
  if (m.edge_count() == 0) return out;
  for_each_assignment(m.edge_count(), [&](const std::vector<int>& color) {
    if (!assignment_proper(m, color)) return;
    std::vector<int> tuple;
    for (const SemiedgeRef& s : m.semiedge_order()) tuple.push_back(color[s.edge]);
    out.insert(tuple);
  });
  return out;
}

bool isomorphic_naive(const Multipole& g1, const Multipole& g2) {
  int n = g1.order();
  if (n != g2.order() || g1.proper_edge_count() != g2.proper_edge_count()) return false;
  auto a1 = g1.adjacency_rows();
  auto a2 = g2.adjacency_rows();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n; ++v) {
        bool e1 = (a1[u] >> v) & 1;
        bool e2 = (a2[perm[u]] >> perm[v]) & 1;
        if (e1 != e2) {
          ok = false;
          break;
        }
      }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

bool isomorphic_backtracking(const Multipole& g1, const Multipole& g2) {
  int n = g1.order();
  if (n != g2.order() || g1.proper_edge_count() != g2.proper_edge_count()) return false;
  auto a1 = g1.adjacency_rows();
  auto a2 = g2.adjacency_rows();
  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);
  std::function<bool(int)> place = [&](int v) {
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
      if (used[w]) continue;
      bool ok = std::popcount(a1[v]) == std::popcount(a2[w]);
      for (int u = 0; u < v && ok; ++u)
        if (((a1[v] >> u) & 1) != ((a2[w] >> map[u]) & 1)) ok = false;
      if (!ok) continue;
      map[v] = w;
      used[w] = 1;
      if (place(v + 1)) return true;
      used[w] = 0;
      map[v] = -1;
    }
    return false;
  };
  return place(0);
}

std::vector<std::string> all_cubic_graphs(int n) {
  std::set<std::string> certs;
  std::vector<std::set<int>> adj(n);
  std::vector<int> deg(n, 0);

  std::function<void(int, int)> complete_vertex = [&](int v, int max_used) {
    if (v == n) {
      std::vector<std::pair<int, int>> edges;
      for (int u = 0; u < n; ++u)
        for (int w : adj[u])
          if (u < w) edges.push_back({u, w});
      Multipole g = Multipole::graph(n, edges);
      if (g.is_connected()) certs.insert(canonical_certificate(g).certificate);
      return;
    }
    if (deg[v] == 3) {
      complete_vertex(v + 1, max_used);
      return;
    }
    // choose the remaining partners of v among later vertices; a fresh vertex
    // may only be the lowest unused one (kills label symmetry among unused ids)
    std::function<void(int, int)> pick = [&](int from, int used_cap) {
      if (deg[v] == 3) {
        complete_vertex(v + 1, used_cap);
        return;
      }
      int limit = std::min(n - 1, used_cap + 1);
      for (int w = from; w <= limit; ++w) {
        if (w <= v || deg[w] >= 3) continue;
        adj[v].insert(w);
        adj[w].insert(v);
        ++deg[v];
        ++deg[w];
        pick(w + 1, std::max(used_cap, w));
        adj[v].erase(w);
        adj[w].erase(v);
        --deg[v];
        --deg[w];
      }
    };
    pick(v + 1, max_used);
  };
  if (n >= 4 && n % 2 == 0) complete_vertex(0, 0);
  return {certs.begin(), certs.end()};
}

std::vector<std::vector<int>> all_circuits(const Multipole& g) {
  int n = g.order();
  auto rows = g.adjacency_rows();
  std::vector<std::vector<int>> adj(n);
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w)
      if ((rows[v] >> w) & 1) adj[v].push_back(w);
  std::vector<std::vector<int>> out;
  std::vector<int> path;
  std::vector<char> used(n, 0);
  std::function<void(int, int)> rec = [&](int start, int v) {
    for (int w : adj[v]) {
      if (w == start && path.size() >= 3) {
        if (path[1] < path.back()) out.push_back(path);  // one direction only
        continue;
      }
      if (w <= start || used[w]) continue;
      used[w] = 1;
      path.push_back(w);
      rec(start, w);
      path.pop_back();
      used[w] = 0;
    }
  };
  for (int s = 0; s < n; ++s) {
    path = {s};
    rec(s, s);
  }
  return out;
}

int oddness_naive(const Multipole& g) {
  int n = g.order(), m = g.edge_count();
  std::vector<char> take(m, 0);
  std::vector<int> deg(n, 0);
  int best = -1;
  std::function<void(int)> rec = [&](int e) {
    if (best == 0) return;
    if (e == m) {
      for (int v = 0; v < n; ++v)
        if (deg[v] != 2) return;
      // count odd components of the chosen subgraph
      std::vector<int> comp(n, -1);
      int odd = 0;
      for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s};
        comp[s] = s;
        int size = 0;
        while (!stack.empty()) {
          int v = stack.back();
          stack.pop_back();
          ++size;
          for (int f = 0; f < m; ++f) {
            if (!take[f]) continue;
            const Edge& edge = g.edge(f);
            int w = -1;
            if (edge.a.vertex == v) w = edge.b.vertex;
            if (edge.b.vertex == v) w = edge.a.vertex;
            if (w >= 0 && comp[w] < 0) {
              comp[w] = s;
              stack.push_back(w);
            }
          }
        }
        if (size % 2 == 1) ++odd;
      }
      if (best < 0 || odd < best) best = odd;
      return;
    }
    const Edge& edge = g.edge(e);
    int a = edge.a.vertex, b = edge.b.vertex;
    // leave it out
    rec(e + 1);
    // take it
    if (edge.is_proper() && !edge.is_loop() && deg[a] < 2 && deg[b] < 2) {
      take[e] = 1;
      ++deg[a];
      ++deg[b];
      rec(e + 1);
      take[e] = 0;
      --deg[a];
      --deg[b];
    }
  };
  rec(0);
  return best;
}

}  // namespace snarklab::oracles
