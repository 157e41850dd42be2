#include "snarklab/coloring.hpp"

#include <algorithm>
#include <functional>

namespace snarklab {

namespace {

std::array<int, 2> edge_ends(const Edge& e) {
  return {e.a.attached() ? e.a.vertex : -1, e.b.attached() ? e.b.vertex : -1};
}

// Backtracking over edges in a fixed order (BFS over shared vertices from the
// lowest unvisited edge id), colors tried in ascending order. The callback
// receives each complete proper 3-coloring; returning true stops the search.
class Solver {
 public:
  Solver(const Multipole& m, const std::vector<int>& removed) : g_(m) {
    if (m.has_loop()) throw Error(Err::LoopPresent, "loops admit no proper edge-coloring");
    alive_.assign(m.edge_count(), 1);
    for (int e : removed) alive_.at(e) = 0;
    color_.assign(m.edge_count(), 0);
    incident_.assign(m.order(), {});
    for (int e = 0; e < m.edge_count(); ++e) {
      if (!alive_[e]) continue;
      for (int v : edge_ends(m.edge(e)))
        if (v >= 0) incident_[v].push_back(e);
    }
    // search order: expand along shared vertices so constraints bind early
    std::vector<char> seen(m.edge_count(), 0);
    for (int s = 0; s < m.edge_count(); ++s) {
      if (!alive_[s] || seen[s]) continue;
      std::vector<int> queue{s};
      seen[s] = 1;
      for (size_t qi = 0; qi < queue.size(); ++qi) {
        int e = queue[qi];
        order_.push_back(e);
        for (int v : edge_ends(g_.edge(e))) {
          if (v < 0) continue;
          for (int f : incident_[v])
            if (!seen[f]) {
              seen[f] = 1;
              queue.push_back(f);
            }
        }
      }
    }
    used_.assign(m.order(), 0);
  }

  void run(const std::function<bool(const std::vector<int>&)>& on_solution) {
    on_solution_ = &on_solution;
    stop_ = false;
    descend(0);
  }

 private:
  void descend(size_t depth) {
    if (stop_) return;
    if (depth == order_.size()) {
      stop_ = (*on_solution_)(color_);
      return;
    }
    int e = order_[depth];
    auto [u, v] = edge_ends(g_.edge(e));
    for (int c = 1; c <= 3; ++c) {
      int bit = 1 << c;
      if (u >= 0 && (used_[u] & bit)) continue;
      if (v >= 0 && (used_[v] & bit)) continue;
      color_[e] = c;
      if (u >= 0) used_[u] |= bit;
      if (v >= 0) used_[v] |= bit;
      descend(depth + 1);
      if (u >= 0) used_[u] &= ~bit;
      if (v >= 0) used_[v] &= ~bit;
      color_[e] = 0;
      if (stop_) return;
    }
  }

  const Multipole& g_;
  std::vector<char> alive_;
  std::vector<int> color_;
  std::vector<std::vector<int>> incident_;
  std::vector<int> order_;
  std::vector<int> used_;
  const std::function<bool(const std::vector<int>&)>* on_solution_ = nullptr;
  bool stop_ = false;
};

}  // namespace

bool coloring_is_proper(const Multipole& m, const EdgeColoring& c) {
  if (c.color.size() != static_cast<size_t>(m.edge_count())) return false;
  std::vector<int> used(m.order(), 0);
  for (int e = 0; e < m.edge_count(); ++e) {
    int col = c.color[e];
    if (col < 0 || col > 3) return false;
    if (m.edge(e).is_loop()) return false;
    for (int v : edge_ends(m.edge(e))) {
      if (v < 0) continue;
      int bit = 1 << col;
      if (used[v] & bit) return false;
      used[v] |= bit;
    }
  }
  return true;
}

std::optional<EdgeColoring> three_edge_coloring_without(const Multipole& m, const std::vector<int>& removed) {
  Solver solver(m, removed);
  std::optional<EdgeColoring> found;
  solver.run([&](const std::vector<int>& colors) {
    found = EdgeColoring{colors};
    return true;
  });
  return found;
}

std::optional<EdgeColoring> three_edge_coloring(const Multipole& m) {
  return three_edge_coloring_without(m, {});
}

bool is_three_edge_colorable(const Multipole& m) { return three_edge_coloring(m).has_value(); }

std::string coloring_type(const std::vector<int>& tuple) {
  std::string out;
  std::array<int, 4> relabel{0, 0, 0, 0};
  int next = 1;
  for (int c : tuple) {
    if (relabel[c] == 0) relabel[c] = next++;
    out.push_back(static_cast<char>('0' + relabel[c]));
  }
  return out;
}

BoundaryColoringSet boundary_colorings(const Multipole& m) {
  if (m.pole_count() < 1) throw Error(Err::BadInput, "boundary colorings need a k-pole, k >= 1");
  Solver solver(m, {});
  std::set<std::vector<int>> tuples;
  solver.run([&](const std::vector<int>& colors) {
    std::vector<int> tuple;
    tuple.reserve(m.pole_count());
    for (const SemiedgeRef& s : m.semiedge_order()) tuple.push_back(colors[s.edge]);
    tuples.insert(std::move(tuple));
    return false;
  });
  BoundaryColoringSet out;
  out.tuples.assign(tuples.begin(), tuples.end());
  if (m.pole_count() == 4)
    for (const auto& t : out.tuples) out.types.insert(coloring_type(t));
  return out;
}

PoleClassification classify_four_pole(const Multipole& m) {
  if (m.pole_count() != 4) throw Error(Err::NotAFourPole, "classification needs a 4-pole");
  BoundaryColoringSet col = boundary_colorings(m);
  PoleClassification out;
  out.types = col.types;
  if (col.tuples.empty()) {
    out.verdict = PoleClassification::Verdict::Uncolourable;
    return out;
  }
  if (col.types.size() != 2) {
    out.verdict = PoleClassification::Verdict::ColourClosed;
    return out;
  }
  out.verdict = PoleClassification::Verdict::ColourOpen;
  out.kind = col.types.count("1111") ? OpenKind::Isochromatic : OpenKind::Heterochromatic;
  // couples: the unique pairing that is always equal-colored (isochromatic)
  // or always distinct-colored (heterochromatic)
  const std::array<std::array<int, 4>, 3> pairings{{{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}};
  for (const auto& p : pairings) {
    bool ok = true;
    for (const auto& t : col.tuples) {
      bool eq1 = t[p[0]] == t[p[1]], eq2 = t[p[2]] == t[p[3]];
      bool want = out.kind == OpenKind::Isochromatic;
      if (eq1 != want || eq2 != want) {
        ok = false;
        break;
      }
    }
    if (ok) {
      out.couples = {{{p[0], p[1]}, {p[2], p[3]}}};
      return out;
    }
  }
  throw Error(Err::BadInput, "colour-open 4-pole without consistent couples");
}

std::vector<int> kempe_chain(const Multipole& m, const EdgeColoring& c, int start_edge, int i, int j) {
  if (i == j || i < 1 || i > 3 || j < 1 || j > 3)
    throw Error(Err::BadColorPair, "chain colors must be distinct and in {1,2,3}");
  if (start_edge < 0 || start_edge >= m.edge_count())
    throw Error(Err::EdgeNotFound, "start edge out of range");
  int c0 = c.color[start_edge];
  if (c0 != i && c0 != j) throw Error(Err::StartNotOnChain, "start edge is not colored i or j");

  std::vector<std::vector<int>> incident(m.order());
  for (int e = 0; e < m.edge_count(); ++e)
    for (int v : edge_ends(m.edge(e)))
      if (v >= 0) incident[v].push_back(e);

  std::vector<char> in_chain(m.edge_count(), 0);
  in_chain[start_edge] = 1;
  std::vector<int> chain{start_edge};
  // extend from both ends of the start edge
  for (int side = 0; side < 2; ++side) {
    int e = start_edge;
    int v = side == 0 ? m.edge(e).a.vertex : m.edge(e).b.vertex;
    while (v >= 0) {
      int want = c.color[e] == i ? j : i;
      int next = -1;
      for (int f : incident[v])
        if (f != e && c.color[f] == want) next = f;
      if (next < 0 || in_chain[next]) break;  // chain end, or circuit closed
      in_chain[next] = 1;
      chain.push_back(next);
      const Edge& ne = m.edge(next);
      v = (ne.a.vertex == v) ? (ne.b.attached() ? ne.b.vertex : -1) : (ne.a.attached() ? ne.a.vertex : -1);
      e = next;
    }
  }
  std::sort(chain.begin(), chain.end());
  return chain;
}

EdgeColoring kempe_switch(const Multipole& m, const EdgeColoring& c, int start_edge, int i, int j) {
  EdgeColoring out = c;
  for (int e : kempe_chain(m, c, start_edge, i, j)) out.color[e] = (c.color[e] == i) ? j : i;
  return out;
}

MinimumColoring minimum_zero_class_coloring(const Multipole& g) {
  if (g.has_loop()) throw Error(Err::LoopPresent, "loops admit no proper edge-coloring");
  auto shares_vertex = [&](int e, int f) {
    for (int u : edge_ends(g.edge(e)))
      for (int v : edge_ends(g.edge(f)))
        if (u >= 0 && u == v) return true;
    return false;
  };
  auto finish = [&](const std::vector<int>& zero, const EdgeColoring& witness) {
    MinimumColoring out;
    out.coloring = witness;
    out.zero_edges = zero;
    out.zero_class_independent = true;
    for (size_t a = 0; a < zero.size(); ++a)
      for (size_t b = a + 1; b < zero.size(); ++b)
        if (shares_vertex(zero[a], zero[b])) out.zero_class_independent = false;
    return out;
  };
  if (auto w = three_edge_coloring(g)) return finish({}, *w);

  // Any proper 4-edge-coloring has an independent zero class, so searching
  // independent removal sets by increasing size is exact. Size 1 is impossible
  // by the Parity Lemma on the resulting 2-pole.
  int m = g.edge_count();
  for (int size = 2; size <= m; ++size) {
    std::vector<int> pick;
    std::optional<MinimumColoring> found;
    std::function<void(int)> combos = [&](int start) {
      if (found) return;
      if (static_cast<int>(pick.size()) == size) {
        if (auto w = three_edge_coloring_without(g, pick)) found = finish(pick, *w);
        return;
      }
      for (int e = start; e < m; ++e) {
        if (!g.edge(e).is_proper()) continue;
        bool indep = std::none_of(pick.begin(), pick.end(), [&](int f) { return shares_vertex(e, f); });
        if (!indep) continue;
        pick.push_back(e);
        combos(e + 1);
        pick.pop_back();
        if (found) return;
      }
    };
    combos(0);
    if (found) return *found;
  }
  throw Error(Err::BadInput, "no proper 4-edge-coloring exists");
}

}  // namespace snarklab
