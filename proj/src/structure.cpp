#include "snarklab/structure.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace snarklab {

namespace {

// Shared scratch for cut enumeration: proper-edge incidence plus component
// labeling with an edge subset removed.
class CutScanner {
 public:
  explicit CutScanner(const Multipole& g) : g_(g), n_(g.order()) {
    for (int e = 0; e < g.edge_count(); ++e)
      if (g.edge(e).is_proper() && !g.edge(e).is_loop()) proper_.push_back(e);
    inc_.assign(n_, {});
    for (int e : proper_) {
      inc_[g.edge(e).a.vertex].push_back({e, g.edge(e).b.vertex});
      inc_[g.edge(e).b.vertex].push_back({e, g.edge(e).a.vertex});
    }
    removed_.assign(g.edge_count(), 0);
    label_.assign(n_, -1);
    queue_.reserve(n_);
  }

  const std::vector<int>& proper_edges() const { return proper_; }

  bool edges_share_vertex(int e, int f) const {
    const Edge& a = g_.edge(e);
    const Edge& b = g_.edge(f);
    return a.a.vertex == b.a.vertex || a.a.vertex == b.b.vertex || a.b.vertex == b.a.vertex ||
           a.b.vertex == b.b.vertex;
  }

  // Labels components of G - removed set; returns component count.
  int label_components(const std::vector<int>& removed) {
    for (int e : removed) removed_[e] = 1;
    std::fill(label_.begin(), label_.end(), -1);
    int comps = 0;
    for (int s = 0; s < n_; ++s) {
      if (label_[s] >= 0) continue;
      label_[s] = comps;
      queue_.clear();
      queue_.push_back(s);
      for (size_t qi = 0; qi < queue_.size(); ++qi) {
        int v = queue_[qi];
        for (auto [e, w] : inc_[v]) {
          if (removed_[e] || label_[w] >= 0) continue;
          label_[w] = comps;
          queue_.push_back(w);
        }
      }
      ++comps;
    }
    for (int e : removed) removed_[e] = 0;
    return comps;
  }

  // After label_components: number of components that contain a cycle.
  int cyclic_component_count(const std::vector<int>& removed, int comps) {
    cyc_v_.assign(comps, 0);
    cyc_e_.assign(comps, 0);
    for (int v = 0; v < n_; ++v) ++cyc_v_[label_[v]];
    for (int e : removed) removed_[e] = 1;
    for (int e : proper_)
      if (!removed_[e]) ++cyc_e_[label_[g_.edge(e).a.vertex]];
    for (int e : removed) removed_[e] = 0;
    int count = 0;
    for (int c = 0; c < comps; ++c)
      if (cyc_e_[c] >= cyc_v_[c]) ++count;
    return count;
  }

  bool is_cycle_separating(const std::vector<int>& removed) {
    int comps = label_components(removed);
    if (comps < 2) return false;
    return cyclic_component_count(removed, comps) >= 2;
  }

  int component_of(int v) const { return label_[v]; }

 private:
  const Multipole& g_;
  int n_;
  std::vector<int> proper_;
  std::vector<std::vector<std::pair<int, int>>> inc_;
  std::vector<char> removed_;
  std::vector<int> label_;
  std::vector<int> queue_;
  std::vector<int> cyc_v_, cyc_e_;
};

// Enumerates independent subsets of the proper edges of size exactly k in
// lexicographic order; stops when the visitor returns true.
bool for_each_independent_subset(const CutScanner& scan, int k,
                                 const std::function<bool(const std::vector<int>&)>& visit) {
  const auto& edges = scan.proper_edges();
  std::vector<int> pick;
  std::function<bool(size_t)> rec = [&](size_t start) -> bool {
    if (static_cast<int>(pick.size()) == k) return visit(pick);
    if (edges.size() - start < k - pick.size()) return false;
    for (size_t i = start; i < edges.size(); ++i) {
      int e = edges[i];
      bool indep = std::none_of(pick.begin(), pick.end(),
                                [&](int f) { return scan.edges_share_vertex(e, f); });
      if (!indep) continue;
      pick.push_back(e);
      if (rec(i + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  return rec(0);
}

CutReport build_report(const Multipole& g, CutScanner& scan, const std::vector<int>& removed) {
  CutReport r;
  int comps = scan.label_components(removed);
  (void)comps;
  // side_a: the component of the lowest-numbered vertex touched by the cut
  int comp_a = scan.component_of(std::min(g.edge(removed.front()).a.vertex, g.edge(removed.front()).b.vertex));
  for (int v = 0; v < g.order(); ++v)
    (scan.component_of(v) == comp_a ? r.side_a : r.side_b).push_back(v);
  r.cut = removed;
  std::sort(r.cut.begin(), r.cut.end());
  r.independent = true;
  for (size_t i = 0; i < removed.size() && r.independent; ++i)
    for (size_t j = i + 1; j < removed.size(); ++j)
      if (scan.edges_share_vertex(removed[i], removed[j])) {
        r.independent = false;
        break;
      }
  return r;
}

void require_connected_graph(const Multipole& g) {
  if (!g.is_connected()) throw Error(Err::Disconnected, "operation needs a connected graph");
}

}  // namespace

int girth(const Multipole& g) {
  int best = -1;
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    if (!edge.is_proper()) continue;
    if (edge.is_loop()) return 1;
    int u = edge.a.vertex, v = edge.b.vertex;
    // shortest u-v path avoiding e closes the shortest cycle through e
    std::vector<int> dist(g.order(), -1);
    std::vector<int> queue{u};
    dist[u] = 0;
    for (size_t qi = 0; qi < queue.size() && dist[v] < 0; ++qi) {
      int x = queue[qi];
      for (int f : g.incident_edges(x)) {
        if (f == e || !g.edge(f).is_proper()) continue;
        int y = g.edge(f).a.vertex == x ? g.edge(f).b.vertex : g.edge(f).a.vertex;
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          queue.push_back(y);
        }
      }
    }
    if (dist[v] >= 0 && (best < 0 || dist[v] + 1 < best)) best = dist[v] + 1;
  }
  if (best < 0) throw Error(Err::AcyclicInput, "graph contains no cycle");
  return best;
}

int cycle_rank(const Multipole& g) { return g.proper_edge_count() - g.order() + 1; }

bool is_cyclically_k_edge_connected(const Multipole& g, int k) {
  require_connected_graph(g);
  CutScanner scan(g);
  for (int size = 1; size < k; ++size) {
    bool found = for_each_independent_subset(
        scan, size, [&](const std::vector<int>& pick) { return scan.is_cycle_separating(pick); });
    if (found) return false;
  }
  return true;
}

CyclicConnectivityResult cyclic_connectivity(const Multipole& g) {
  require_connected_graph(g);
  if (!g.is_cubic() || !g.is_graph()) throw Error(Err::NotCubic, "cyclic connectivity needs a cubic graph");
  int beta = cycle_rank(g);
  int cap = beta;
  try {
    cap = std::min(beta, girth(g));
  } catch (const Error&) {
    throw Error(Err::AcyclicInput, "cyclic connectivity undefined for acyclic input");
  }
  CutScanner scan(g);
  CyclicConnectivityResult out;
  for (int k = 1; k <= cap; ++k) {
    std::vector<int> hit;
    bool found = for_each_independent_subset(scan, k, [&](const std::vector<int>& pick) {
      if (!scan.is_cycle_separating(pick)) return false;
      hit = pick;
      return true;
    });
    if (found) {
      out.zeta = k;
      out.capped = false;
      out.witness = build_report(g, scan, hit);
      return out;
    }
  }
  out.zeta = cap;
  out.capped = true;
  return out;
}

StructureRecord structure_record(const Multipole& g) {
  StructureRecord r;
  r.girth = girth(g);
  r.cycle_rank = cycle_rank(g);
  auto cc = cyclic_connectivity(g);
  r.cyclic_connectivity = cc.zeta;
  r.capped = cc.capped;
  return r;
}

std::vector<CutReport> cycle_separating_cuts(const Multipole& g, int k) {
  require_connected_graph(g);
  CutScanner scan(g);
  const auto& edges = scan.proper_edges();
  std::vector<CutReport> out;
  std::vector<int> pick;
  std::function<void(size_t)> rec = [&](size_t start) {
    if (static_cast<int>(pick.size()) == k) {
      int comps = scan.label_components(pick);
      if (comps != 2) return;
      if (scan.cyclic_component_count(pick, comps) != 2) return;
      // every cut edge must join the two sides
      for (int e : pick)
        if (scan.component_of(g.edge(e).a.vertex) == scan.component_of(g.edge(e).b.vertex)) return;
      out.push_back(build_report(g, scan, pick));
      return;
    }
    if (edges.size() - start < k - pick.size()) return;
    for (size_t i = start; i < edges.size(); ++i) {
      pick.push_back(edges[i]);
      rec(i + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return out;
}

std::pair<Multipole, Multipole> split_along_cut(const Multipole& g, const std::vector<int>& cut) {
  auto comps = vertex_components(g, cut);
  if (comps.size() != 2) throw Error(Err::NotCycleSeparating, "cut does not split the graph in two");
  auto build = [&](const std::vector<int>& side) {
    std::vector<int> relabel(g.order(), -1);
    for (size_t i = 0; i < side.size(); ++i) relabel[side[i]] = static_cast<int>(i);
    std::vector<char> in_cut(g.edge_count(), 0);
    for (int e : cut) in_cut[e] = 1;
    std::vector<Edge> edges;
    std::vector<SemiedgeRef> order;
    for (int e = 0; e < g.edge_count(); ++e) {
      if (in_cut[e]) continue;
      Edge edge = g.edge(e);
      bool a_in = edge.a.attached() && relabel[edge.a.vertex] >= 0;
      bool b_in = edge.b.attached() && relabel[edge.b.vertex] >= 0;
      if (!a_in && !b_in) continue;
      if (edge.a.attached() && !a_in) throw Error(Err::BadInput, "edge straddles the cut but is not in it");
      if (edge.b.attached() && !b_in) throw Error(Err::BadInput, "edge straddles the cut but is not in it");
      if (edge.a.attached()) edge.a.vertex = relabel[edge.a.vertex];
      if (edge.b.attached()) edge.b.vertex = relabel[edge.b.vertex];
      if (!edge.a.attached() || !edge.b.attached())
        throw Error(Err::HasSemiedges, "split_along_cut expects a closed graph");
      edges.push_back(edge);
    }
    for (int e : cut) {
      const Edge& edge = g.edge(e);
      int end = relabel[edge.a.vertex] >= 0 ? relabel[edge.a.vertex]
                                            : relabel[edge.b.vertex];
      if (relabel[edge.a.vertex] >= 0 && relabel[edge.b.vertex] >= 0)
        throw Error(Err::NotCycleSeparating, "cut edge has both ends on one side");
      order.push_back(SemiedgeRef{static_cast<int>(edges.size()), 1});
      edges.push_back(Edge{End{end}, End{}});
    }
    return Multipole(static_cast<int>(side.size()), std::move(edges), std::move(order));
  };
  return {build(comps[0]), build(comps[1])};
}

std::vector<std::vector<int>> atoms(const Multipole& g) {
  auto cc = cyclic_connectivity(g);
  if (cc.capped || !cc.witness) return {};
  auto cuts = cycle_separating_cuts(g, cc.zeta);
  std::vector<std::vector<int>> fragments;
  for (const auto& cut : cuts) {
    if (!cut.independent) continue;
    fragments.push_back(cut.side_a);
    fragments.push_back(cut.side_b);
  }
  std::vector<std::vector<int>> minimal;
  for (const auto& f : fragments) {
    bool is_min = std::none_of(fragments.begin(), fragments.end(), [&](const std::vector<int>& h) {
      return h != f && std::includes(f.begin(), f.end(), h.begin(), h.end());
    });
    if (is_min && std::find(minimal.begin(), minimal.end(), f) == minimal.end()) minimal.push_back(f);
  }
  std::sort(minimal.begin(), minimal.end());
  return minimal;
}

ComparabilityReport check_comparable_two_cuts(const Multipole& fragment) {
  ComparabilityReport out;
  // attachment vertices: ends of the dangling edges
  std::vector<int> attach;
  for (const SemiedgeRef& s : fragment.semiedge_order()) {
    const Edge& e = fragment.edge(s.edge);
    const End& other = s.side == 0 ? e.b : e.a;
    if (!other.attached()) throw Error(Err::PreconditionUnverifiable, "fragment has an isolated edge");
    attach.push_back(other.vertex);
  }
  if (attach.size() != 4) throw Error(Err::NotAFourPole, "fragment must be a 4-pole");

  // the 4-cycle fragment is a special case: every 2-cut is trivial
  if (fragment.order() == 4 && fragment.proper_edge_count() == 4 && girth(fragment) == 4) {
    out.is_four_cycle = true;
    out.all_comparable = true;
    return out;
  }

  std::vector<int> proper;
  for (int e = 0; e < fragment.edge_count(); ++e)
    if (fragment.edge(e).is_proper()) proper.push_back(e);

  std::vector<std::pair<uint64_t, uint64_t>> sides;
  for (size_t i = 0; i < proper.size(); ++i) {
    for (size_t j = i + 1; j < proper.size(); ++j) {
      auto comps = vertex_components(fragment, {proper[i], proper[j]});
      if (comps.size() != 2) continue;
      auto in = [&](const std::vector<int>& set, int v) {
        return std::binary_search(set.begin(), set.end(), v);
      };
      // both edges must join the two sides
      bool crossing = true;
      for (int e : {proper[i], proper[j]}) {
        int a = fragment.edge(e).a.vertex, b = fragment.edge(e).b.vertex;
        if (in(comps[0], a) == in(comps[0], b)) crossing = false;
      }
      if (!crossing) continue;
      if (comps[0].size() < 2 || comps[1].size() < 2) continue;  // trivial
      TwoCut cut;
      cut.e1 = proper[i];
      cut.e2 = proper[j];
      cut.side_a = comps[0];
      cut.side_b = comps[1];
      uint64_t mask_a = 0;
      for (int v : comps[0]) mask_a |= uint64_t{1} << v;
      uint64_t all = (fragment.order() == 64) ? ~uint64_t{0} : ((uint64_t{1} << fragment.order()) - 1);
      sides.push_back({mask_a, all & ~mask_a});
      out.cuts.push_back(std::move(cut));
    }
  }
  out.all_comparable = true;
  for (size_t i = 0; i < sides.size() && out.all_comparable; ++i) {
    for (size_t j = i + 1; j < sides.size(); ++j) {
      auto nested = [](uint64_t x, uint64_t y) { return (x & ~y) == 0 || (y & ~x) == 0; };
      if (!nested(sides[i].first, sides[j].first) && !nested(sides[i].first, sides[j].second)) {
        out.all_comparable = false;
        break;
      }
    }
  }
  if (!out.cuts.empty() && out.all_comparable) {
    // every cut splits the attachments the same way; read it off the first cut
    const TwoCut& c = out.cuts.front();
    for (int a : attach) {
      bool in_a = std::binary_search(c.side_a.begin(), c.side_a.end(), a);
      auto& bucket = in_a ? out.attachment_bipartition[0] : out.attachment_bipartition[1];
      if (std::find(bucket.begin(), bucket.end(), a) == bucket.end()) bucket.push_back(a);
    }
  }
  return out;
}

std::vector<int> bridges(const Multipole& g) {
  int n = g.order();
  std::vector<std::vector<std::pair<int, int>>> inc(n);
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!g.edge(e).is_proper() || g.edge(e).is_loop()) continue;
    inc[g.edge(e).a.vertex].push_back({e, g.edge(e).b.vertex});
    inc[g.edge(e).b.vertex].push_back({e, g.edge(e).a.vertex});
  }
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<int> out;
  int timer = 0;
  std::function<void(int, int)> dfs = [&](int v, int parent_edge) {
    disc[v] = low[v] = timer++;
    for (auto [e, w] : inc[v]) {
      if (e == parent_edge) continue;
      if (disc[w] < 0) {
        dfs(w, e);
        low[v] = std::min(low[v], low[w]);
        if (low[w] > disc[v]) out.push_back(e);
      } else {
        low[v] = std::min(low[v], disc[w]);
      }
    }
  };
  for (int v = 0; v < n; ++v)
    if (disc[v] < 0) dfs(v, -1);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace snarklab
