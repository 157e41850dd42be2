#include "snarklab/measures.hpp"

#include <algorithm>
#include <functional>

#include "snarklab/coloring.hpp"
#include "snarklab/structure.hpp"

namespace snarklab {

std::vector<std::vector<int>> perfect_matchings(const Multipole& g) {
  int n = g.order();
  std::vector<std::vector<std::pair<int, int>>> inc(n);
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    if (!edge.is_proper() || edge.is_loop()) continue;
    inc[edge.a.vertex].push_back({e, edge.b.vertex});
    inc[edge.b.vertex].push_back({e, edge.a.vertex});
  }
  std::vector<std::vector<int>> out;
  std::vector<char> covered(n, 0);
  std::vector<int> pick;
  // pivot on the lowest uncovered vertex
  std::function<void()> rec = [&]() {
    int v = -1;
    for (int i = 0; i < n; ++i)
      if (!covered[i]) {
        v = i;
        break;
      }
    if (v < 0) {
      std::vector<int> m = pick;
      std::sort(m.begin(), m.end());
      out.push_back(std::move(m));
      return;
    }
    for (auto [e, w] : inc[v]) {
      if (covered[w] || w == v) continue;
      covered[v] = covered[w] = 1;
      pick.push_back(e);
      rec();
      pick.pop_back();
      covered[v] = covered[w] = 0;
    }
  };
  rec();
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

TwoFactorWitness circuits_of_complement(const Multipole& g, const std::vector<int>& matching) {
  std::vector<char> in_matching(g.edge_count(), 0);
  for (int e : matching) in_matching[e] = 1;
  int n = g.order();
  std::vector<std::vector<std::pair<int, int>>> inc(n);
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    if (!edge.is_proper() || in_matching[e]) continue;
    inc[edge.a.vertex].push_back({e, edge.b.vertex});
    inc[edge.b.vertex].push_back({e, edge.a.vertex});
  }
  TwoFactorWitness out;
  std::vector<char> seen(n, 0);
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> circuit;
    int v = s, prev_edge = -1;
    do {
      circuit.push_back(v);
      seen[v] = 1;
      int next = -1, via = -1;
      for (auto [e, w] : inc[v])
        if (e != prev_edge && (w != v || inc[v].size() < 2)) {
          next = w;
          via = e;
          break;
        }
      prev_edge = via;
      v = next;
    } while (v >= 0 && v != s);
    out.circuits.push_back(circuit);
    if (circuit.size() % 2 == 1) ++out.odd_circuits;
  }
  return out;
}

}  // namespace

OddnessResult oddness(const Multipole& g) {
  if (!g.is_graph() || !g.is_cubic()) throw Error(Err::NotCubic, "oddness needs a cubic graph");
  if (!g.is_connected()) throw Error(Err::Disconnected, "oddness needs a connected graph");
  if (!bridges(g).empty()) throw Error(Err::BridgePresent, "oddness is undefined for bridged graphs");
  auto matchings = perfect_matchings(g);
  if (matchings.empty()) throw Error(Err::BadInput, "bridgeless cubic graph without perfect matching");
  OddnessResult best;
  best.oddness = -1;
  for (const auto& m : matchings) {
    TwoFactorWitness w = circuits_of_complement(g, m);
    if (best.oddness < 0 || w.odd_circuits < best.oddness) {
      best.oddness = w.odd_circuits;
      best.witness = std::move(w);
      if (best.oddness == 0) break;
    }
  }
  return best;
}

ResistanceResult resistance(const Multipole& g) {
  if (!g.is_graph() || !g.is_cubic()) throw Error(Err::NotCubic, "resistance needs a cubic graph");
  ResistanceResult out;
  if (is_three_edge_colorable(g)) return out;
  int m = g.edge_count();
  std::vector<int> proper;
  for (int e = 0; e < m; ++e)
    if (g.edge(e).is_proper()) proper.push_back(e);
  auto shares = [&](int e, int f) {
    const Edge& a = g.edge(e);
    const Edge& b = g.edge(f);
    return a.a.vertex == b.a.vertex || a.a.vertex == b.b.vertex || a.b.vertex == b.a.vertex ||
           a.b.vertex == b.b.vertex;
  };
  // rho = 1 is impossible: severing one edge yields a 2-pole whose semiedges
  // would need distinct colors, against the Parity Lemma
  for (int size = 2; size <= static_cast<int>(proper.size()); ++size) {
    std::vector<int> pick;
    bool found = false;
    std::function<void(size_t)> rec = [&](size_t start) {
      if (found) return;
      if (static_cast<int>(pick.size()) == size) {
        if (three_edge_coloring_without(g, pick)) {
          out.resistance = size;
          out.removal = pick;
          found = true;
        }
        return;
      }
      for (size_t i = start; i < proper.size() && !found; ++i) {
        pick.push_back(proper[i]);
        rec(i + 1);
        pick.pop_back();
      }
    };
    rec(0);
    if (found) {
      out.removal_independent = true;
      for (size_t i = 0; i < out.removal.size(); ++i)
        for (size_t j = i + 1; j < out.removal.size(); ++j)
          if (shares(out.removal[i], out.removal[j])) out.removal_independent = false;
      return out;
    }
  }
  throw Error(Err::BadInput, "no removal set found");
}

MeasuresRecord measures_record(const Multipole& g) {
  MeasuresRecord r;
  auto o = oddness(g);
  auto rho = resistance(g);
  r.oddness = o.oddness;
  r.resistance = rho.resistance;
  r.witness_two_factor = o.witness;
  r.witness_removal = rho.removal;
  return r;
}

}  // namespace snarklab
