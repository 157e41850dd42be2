#include "snarklab/canonical.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>

#include "snarklab/graph6.hpp"

namespace snarklab {

namespace {

using Cells = std::vector<std::vector<int>>;

class CanonSearch {
 public:
  explicit CanonSearch(const Multipole& g) : g_(g), n_(g.order()) {
    if (!g.is_graph()) throw Error(Err::HasSemiedges, "canonical form needs a closed graph");
    if (!g.is_simple()) throw Error(Err::NotSimple, "canonical form needs a simple graph");
    if (!g.is_connected()) throw Error(Err::Disconnected, "canonical form needs a connected graph");
    adj_ = g.adjacency_rows();
  }

  void run() {
    Cells initial = seed_partition();
    search(initial);
  }

  std::vector<int> best_perm;                      // canonical position -> old vertex
  std::vector<std::vector<int>> automorphisms;     // old -> old

 private:
  Cells seed_partition() {
    // distance profile is label-invariant, so grouping by it is safe and
    // cheaply breaks the regular-degree symmetry
    std::vector<std::vector<int>> profile(n_);
    for (int v = 0; v < n_; ++v) {
      std::vector<int> dist(n_, -1);
      std::vector<int> queue{v};
      dist[v] = 0;
      for (size_t qi = 0; qi < queue.size(); ++qi) {
        int x = queue[qi];
        uint64_t row = adj_[x];
        while (row) {
          int y = std::countr_zero(row);
          row &= row - 1;
          if (dist[y] < 0) {
            dist[y] = dist[x] + 1;
            queue.push_back(y);
          }
        }
      }
      std::vector<int> hist(n_, 0);
      for (int d : dist) ++hist[d];
      profile[v] = std::move(hist);
    }
    std::map<std::vector<int>, std::vector<int>> groups;
    for (int v = 0; v < n_; ++v) groups[profile[v]].push_back(v);
    Cells cells;
    for (auto& [key, members] : groups) cells.push_back(members);
    return cells;
  }

  void refine(Cells& cells) {
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<uint64_t> masks(cells.size(), 0);
      for (size_t c = 0; c < cells.size(); ++c)
        for (int v : cells[c]) masks[c] |= uint64_t{1} << v;
      for (size_t s = 0; s < cells.size() && !changed; ++s) {
        for (size_t c = 0; c < cells.size(); ++c) {
          if (cells[c].size() < 2) continue;
          std::map<int, std::vector<int>> split;
          for (int v : cells[c]) split[std::popcount(adj_[v] & masks[s])].push_back(v);
          if (split.size() < 2) continue;
          Cells next;
          for (size_t i = 0; i < cells.size(); ++i) {
            if (i == c) {
              for (auto& [cnt, members] : split) next.push_back(members);
            } else {
              next.push_back(cells[i]);
            }
          }
          cells.swap(next);
          changed = true;
          break;
        }
      }
    }
  }

  void search(Cells cells) {
    refine(cells);
    int target = -1;
    for (size_t c = 0; c < cells.size(); ++c)
      if (cells[c].size() > 1) {
        target = static_cast<int>(c);
        break;
      }
    if (target < 0) {
      leaf(cells);
      return;
    }
    std::vector<int> members = cells[target];
    std::sort(members.begin(), members.end());
    for (int v : members) {
      Cells child;
      for (size_t c = 0; c < cells.size(); ++c) {
        if (static_cast<int>(c) == target) {
          child.push_back({v});
          std::vector<int> rest;
          for (int w : cells[c])
            if (w != v) rest.push_back(w);
          child.push_back(std::move(rest));
        } else {
          child.push_back(cells[c]);
        }
      }
      search(std::move(child));
    }
  }

  void leaf(const Cells& cells) {
    std::vector<int> perm;
    perm.reserve(n_);
    for (const auto& cell : cells) perm.push_back(cell.front());
    std::vector<int> pos(n_);
    for (int p = 0; p < n_; ++p) pos[perm[p]] = p;
    std::vector<uint64_t> enc(n_, 0);
    for (int p = 0; p < n_; ++p) {
      uint64_t row = adj_[perm[p]];
      while (row) {
        int y = std::countr_zero(row);
        row &= row - 1;
        enc[p] |= uint64_t{1} << pos[y];
      }
    }
    if (best_perm.empty() || enc < best_enc_) {
      best_enc_ = std::move(enc);
      best_perm = std::move(perm);
    } else if (enc == best_enc_) {
      std::vector<int> sigma(n_);
      for (int p = 0; p < n_; ++p) sigma[best_perm[p]] = perm[p];
      automorphisms.push_back(std::move(sigma));
    }
  }

  const Multipole& g_;
  int n_;
  std::array<uint64_t, kMaxVertices> adj_{};
  std::vector<uint64_t> best_enc_;
};

}  // namespace

CanonicalCertificate canonical_certificate(const Multipole& g) {
  CanonSearch search(g);
  search.run();
  int n = g.order();
  std::vector<int> relabel(n);
  for (int p = 0; p < n; ++p) relabel[search.best_perm[p]] = p;
  std::vector<std::pair<int, int>> edges;
  for (const Edge& e : g.edges()) edges.push_back({relabel[e.a.vertex], relabel[e.b.vertex]});
  CanonicalCertificate out;
  out.relabeling = relabel;
  out.certificate = graph6_encode(Multipole::graph(n, edges));
  return out;
}

std::vector<std::vector<int>> automorphism_group(const Multipole& g) {
  CanonSearch search(g);
  search.run();
  std::vector<std::vector<int>> group = search.automorphisms;
  std::vector<int> identity(g.order());
  std::iota(identity.begin(), identity.end(), 0);
  group.push_back(identity);
  std::sort(group.begin(), group.end());
  group.erase(std::unique(group.begin(), group.end()), group.end());
  return group;
}

bool are_isomorphic(const Multipole& g1, const Multipole& g2) {
  if (g1.order() != g2.order() || g1.proper_edge_count() != g2.proper_edge_count()) return false;
  return canonical_certificate(g1).certificate == canonical_certificate(g2).certificate;
}

OrbitPartition automorphism_orbits(const Multipole& g, OrbitKind kind) {
  auto group = automorphism_group(g);
  std::vector<std::vector<int>> universe;
  std::vector<std::pair<int, int>> edge_pairs;
  for (const Edge& e : g.edges())
    if (e.is_proper()) edge_pairs.push_back(std::minmax(e.a.vertex, e.b.vertex));
  std::sort(edge_pairs.begin(), edge_pairs.end());
  edge_pairs.erase(std::unique(edge_pairs.begin(), edge_pairs.end()), edge_pairs.end());
  if (kind == OrbitKind::Edge || kind == OrbitKind::AdjacentVertexPair) {
    for (auto [u, v] : edge_pairs) universe.push_back({u, v});
  } else {
    for (size_t i = 0; i < edge_pairs.size(); ++i)
      for (size_t j = i + 1; j < edge_pairs.size(); ++j) {
        auto [a, b] = edge_pairs[i];
        auto [c, d] = edge_pairs[j];
        if (a == c || a == d || b == c || b == d) continue;
        universe.push_back({a, b, c, d});
      }
  }
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < universe.size(); ++i) index[universe[i]] = static_cast<int>(i);

  std::vector<int> parent(universe.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };

  auto map_element = [&](const std::vector<int>& el, const std::vector<int>& sigma) {
    std::vector<int> out;
    if (el.size() == 2) {
      auto [u, v] = std::minmax({sigma[el[0]], sigma[el[1]]});
      out = {u, v};
    } else {
      std::pair<int, int> p1 = std::minmax({sigma[el[0]], sigma[el[1]]});
      std::pair<int, int> p2 = std::minmax({sigma[el[2]], sigma[el[3]]});
      if (p2 < p1) std::swap(p1, p2);
      out = {p1.first, p1.second, p2.first, p2.second};
    }
    return out;
  };
  for (const auto& sigma : group)
    for (size_t i = 0; i < universe.size(); ++i) {
      int j = index.at(map_element(universe[i], sigma));
      int ri = find(static_cast<int>(i)), rj = find(j);
      if (ri != rj) parent[ri] = rj;
    }

  std::map<int, std::vector<std::vector<int>>> classes;
  for (size_t i = 0; i < universe.size(); ++i) classes[find(static_cast<int>(i))].push_back(universe[i]);
  OrbitPartition out;
  out.kind = kind;
  for (auto& [root, members] : classes) out.classes.push_back(std::move(members));
  return out;
}

}  // namespace snarklab
