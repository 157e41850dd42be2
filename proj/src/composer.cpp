#include "snarklab/composer.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <set>

#include "json.hpp"
#include "snarklab/canonical.hpp"
#include "snarklab/graph6.hpp"
#include "snarklab/measures.hpp"

namespace snarklab {

namespace {

// Attach the semiedges at positions p1 to a new vertex x1 and those at p2 to
// an adjacent new vertex x2.
Multipole attach_two_vertices(const Multipole& m, std::array<int, 2> p1, std::array<int, 2> p2) {
  int x1 = m.order(), x2 = m.order() + 1;
  std::vector<Edge> edges = m.edges();
  auto attach = [&](int pos, int v) {
    SemiedgeRef s = m.semiedge_order()[pos];
    End& end = s.side == 0 ? edges[s.edge].a : edges[s.edge].b;
    end.vertex = v;
  };
  attach(p1[0], x1);
  attach(p1[1], x1);
  attach(p2[0], x2);
  attach(p2[1], x2);
  edges.push_back(Edge{End{x1}, End{x2}});
  return Multipole(m.order() + 2, std::move(edges), {});
}

constexpr std::array<std::array<std::array<int, 2>, 2>, 3> kPairings = {{
    {{{0, 1}, {2, 3}}},
    {{{0, 2}, {1, 3}}},
    {{{0, 3}, {1, 2}}},
}};

}  // namespace

Multipole extend_colour_open(const Multipole& m) {
  if (m.pole_count() != 4) throw Error(Err::NotAFourPole, "extension needs a 4-pole");
  PoleClassification cls = classify_four_pole(m);
  if (cls.verdict != PoleClassification::Verdict::ColourOpen)
    throw Error(Err::NotColourOpen, "only colour-open 4-poles extend to a snark");
  if (cls.kind == OpenKind::Heterochromatic)
    return self_junction(m, {cls.couples[0], cls.couples[1]});
  return attach_two_vertices(m, {cls.couples[0].first, cls.couples[0].second},
                             {cls.couples[1].first, cls.couples[1].second});
}

Multipole extend_with_two_vertices(const Multipole& fragment) {
  if (fragment.pole_count() != 4) throw Error(Err::NotAFourPole, "extension needs a 4-pole");
  for (const auto& pairing : kPairings) {
    Multipole cand = attach_two_vertices(fragment, pairing[0], pairing[1]);
    if (!cand.is_simple() || !cand.is_connected() || !cand.is_cubic()) continue;
    if (is_cyclically_k_edge_connected(cand, 4)) return cand;
  }
  throw Error(Err::NoValidPairing, "no attachment pairing is cyclically 4-edge-connected");
}

namespace {

FragmentExtension extend_fragment(const Multipole& frag) {
  FragmentExtension fx;
  fx.classification = classify_four_pole(frag);
  if (fx.classification.verdict == PoleClassification::Verdict::ColourOpen) {
    fx.extension = extend_colour_open(frag);
    fx.added_vertices = fx.classification.kind == OpenKind::Heterochromatic ? 0 : 2;
  } else {
    try {
      fx.extension = extend_with_two_vertices(frag);
    } catch (const Error& err) {
      if (err.code() != Err::NoValidPairing) throw;
      // precondition violated upstream; report the first pairing anyway
      fx.extension = attach_two_vertices(frag, kPairings[0][0], kPairings[0][1]);
    }
    fx.added_vertices = 2;
  }
  auto zr = cyclic_connectivity(fx.extension);
  fx.zeta = zr.zeta;
  fx.zeta_capped = zr.capped;
  fx.extension_colorable = is_three_edge_colorable(fx.extension);
  return fx;
}

}  // namespace

DecompositionCase decompose_along_cut(const Multipole& g, const std::vector<int>& cut_edges) {
  if (cut_edges.size() != 4) throw Error(Err::NotAFourCut, "cut must have exactly 4 edges");
  for (int e : cut_edges)
    if (e < 0 || e >= g.edge_count() || !g.edge(e).is_proper())
      throw Error(Err::EdgeNotFound, "cut edge id out of range");
  auto comps = vertex_components(g, cut_edges);
  if (comps.size() != 2) throw Error(Err::NotCycleSeparating, "cut does not leave two components");
  for (const auto& comp : comps) {
    // a component is cyclic when it carries at least as many edges as vertices
    int internal = 0;
    for (int e = 0; e < g.edge_count(); ++e) {
      const Edge& edge = g.edge(e);
      if (!edge.is_proper()) continue;
      if (std::find(cut_edges.begin(), cut_edges.end(), e) != cut_edges.end()) continue;
      if (std::binary_search(comp.begin(), comp.end(), edge.a.vertex) &&
          std::binary_search(comp.begin(), comp.end(), edge.b.vertex))
        ++internal;
    }
    if (internal < static_cast<int>(comp.size()))
      throw Error(Err::NotCycleSeparating, "a side of the cut is acyclic");
  }
  for (int e : cut_edges) {
    const Edge& edge = g.edge(e);
    if (std::binary_search(comps[0].begin(), comps[0].end(), edge.a.vertex) ==
        std::binary_search(comps[0].begin(), comps[0].end(), edge.b.vertex))
      throw Error(Err::NotCycleSeparating, "cut edge does not cross the two sides");
  }

  DecompositionCase out;
  out.cut.cut = cut_edges;
  out.cut.side_a = comps[0];
  out.cut.side_b = comps[1];
  out.cut.independent = true;
  for (size_t i = 0; i < cut_edges.size() && out.cut.independent; ++i)
    for (size_t j = i + 1; j < cut_edges.size(); ++j) {
      const Edge& a = g.edge(cut_edges[i]);
      const Edge& b = g.edge(cut_edges[j]);
      if (a.a.vertex == b.a.vertex || a.a.vertex == b.b.vertex || a.b.vertex == b.a.vertex ||
          a.b.vertex == b.b.vertex) {
        out.cut.independent = false;
        break;
      }
    }

  auto [m1, m2] = split_along_cut(g, cut_edges);
  out.left = extend_fragment(m1);
  out.right = extend_fragment(m2);

  auto uncol = [](const FragmentExtension& fx) {
    return fx.classification.verdict == PoleClassification::Verdict::Uncolourable;
  };
  auto open_kind = [](const FragmentExtension& fx) -> std::optional<OpenKind> {
    if (fx.classification.verdict != PoleClassification::Verdict::ColourOpen) return std::nullopt;
    return fx.classification.kind;
  };
  if (uncol(out.left) && uncol(out.right)) {
    out.label = DecompositionLabel::BothUncolourable;
  } else if (uncol(out.left) || uncol(out.right)) {
    const FragmentExtension& other = uncol(out.left) ? out.right : out.left;
    auto kind = open_kind(other);
    if (kind == OpenKind::Heterochromatic)
      out.label = DecompositionLabel::UncolourableHeterochromatic;
    else if (kind == OpenKind::Isochromatic)
      out.label = DecompositionLabel::UncolourableIsochromatic;
    else
      out.label = DecompositionLabel::BothUncolourable;  // colour-closed partner: nearest bucket
  } else {
    out.label = DecompositionLabel::BothColourable;
    if (bridges(g).empty() && g.is_cubic()) out.omega = oddness(g).oddness;
  }
  return out;
}

namespace {

struct Extraction {
  JoinSpec::Mode mode;
  std::array<int, 2> element;
  Multipole pole;
  int removed;  // vertices removed from the host
};

std::vector<Extraction> extraction_candidates(const Multipole& g, bool pruning) {
  std::vector<Extraction> out;
  if (pruning) {
    auto vo = automorphism_orbits(g, OrbitKind::AdjacentVertexPair);
    for (const auto& cls : vo.classes) {
      const auto& el = cls.front();
      out.push_back({JoinSpec::Mode::Vertices, {el[0], el[1]},
                     extract_four_pole(g, AdjacentVertices{el[0], el[1]}), 2});
    }
    auto eo = automorphism_orbits(g, OrbitKind::NonadjacentEdgePair);
    for (const auto& cls : eo.classes) {
      const auto& el = cls.front();
      int e = g.find_edge(el[0], el[1]);
      int f = g.find_edge(el[2], el[3]);
      out.push_back({JoinSpec::Mode::Edges, {std::min(e, f), std::max(e, f)},
                     extract_four_pole(g, NonadjacentEdges{e, f}), 0});
    }
  } else {
    for (int e = 0; e < g.edge_count(); ++e) {
      const Edge& edge = g.edge(e);
      if (!edge.is_proper()) continue;
      auto [u, v] = std::minmax(edge.a.vertex, edge.b.vertex);
      out.push_back({JoinSpec::Mode::Vertices, {u, v}, extract_four_pole(g, AdjacentVertices{u, v}), 2});
    }
    auto shares = [&](int e, int f) {
      const Edge& a = g.edge(e);
      const Edge& b = g.edge(f);
      return a.a.vertex == b.a.vertex || a.a.vertex == b.b.vertex || a.b.vertex == b.a.vertex ||
             a.b.vertex == b.b.vertex;
    };
    for (int e = 0; e < g.edge_count(); ++e) {
      if (!g.edge(e).is_proper()) continue;
      for (int f = e + 1; f < g.edge_count(); ++f) {
        if (!g.edge(f).is_proper() || shares(e, f)) continue;
        out.push_back({JoinSpec::Mode::Edges, {e, f}, extract_four_pole(g, NonadjacentEdges{e, f}), 0});
      }
    }
  }
  return out;
}

}  // namespace

FourJoinStats four_join_stream(const Multipole& g1, const Multipole& g2,
                               const FourJoinOptions& options, const FourJoinSink& sink) {
  for (const Multipole* g : {&g1, &g2})
    if (!g->is_graph() || !g->is_cubic() || !g->is_simple())
      throw Error(Err::NotCubic, "4-join needs simple cubic graphs");
  auto lefts = extraction_candidates(g1, options.orbit_pruning);
  auto rights = extraction_candidates(g2, options.orbit_pruning);
  FourJoinStats stats;
  std::set<std::string> seen;
  for (const Extraction& left : lefts) {
    for (const Extraction& right : rights) {
      int order = g1.order() + g2.order() - left.removed - right.removed;
      if (order > options.max_order) continue;
      std::array<int, 4> perm = {0, 1, 2, 3};
      do {
        ++stats.joins_enumerated;
        JunctionPairing jp;
        for (int p = 0; p < 4; ++p) jp.pairs.push_back({p, perm[p]});
        Multipole joined = complete_junction(left.pole, right.pole, jp);
        if (!joined.is_simple() || !joined.is_connected()) continue;
        ++stats.simple_outputs;
        std::string cert = canonical_certificate(joined).certificate;
        if (options.dedupe && !seen.insert(cert).second) continue;
        JoinSpec spec;
        spec.left_mode = left.mode;
        spec.right_mode = right.mode;
        spec.left_element = left.element;
        spec.right_element = right.element;
        spec.bijection = perm;
        sink(joined, spec, cert);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
  return stats;
}

namespace {

nlohmann::json audit_to_json(const PairAudit& a) {
  return {{"left", a.left},
          {"right", a.right},
          {"joins_enumerated", a.joins_enumerated},
          {"simple_outputs", a.simple_outputs},
          {"snarks", a.snarks},
          {"zeta_ge_4", a.zeta_ge_4},
          {"omega_ge_4", a.omega_ge_4},
          {"elapsed", a.elapsed_ms}};
}

PairAudit audit_from_json(const nlohmann::json& j) {
  PairAudit a;
  a.left = j.at("left");
  a.right = j.at("right");
  a.joins_enumerated = j.at("joins_enumerated");
  a.simple_outputs = j.at("simple_outputs");
  a.snarks = j.at("snarks");
  a.zeta_ge_4 = j.at("zeta_ge_4");
  a.omega_ge_4 = j.at("omega_ge_4");
  a.elapsed_ms = j.at("elapsed");
  return a;
}

}  // namespace

Oddness4Report oddness4_search(const std::vector<Multipole>& pool, const Oddness4Options& options) {
  using nlohmann::json;
  std::vector<std::string> names;
  for (const Multipole& g : pool) names.push_back(graph6_encode(g));
  std::vector<std::pair<int, int>> pairs;
  for (size_t i = 0; i < pool.size(); ++i)
    for (size_t j = i; j < pool.size(); ++j) pairs.push_back({static_cast<int>(i), static_cast<int>(j)});

  Oddness4Report report;
  report.pairs_total = static_cast<int>(pairs.size());
  std::set<std::string> hit_certs;
  int start_pair = 0;

  if (!options.checkpoint_path.empty()) {
    std::ifstream in(options.checkpoint_path);
    if (in) {
      json ck = json::parse(in, nullptr, false);
      if (ck.is_discarded() || !ck.contains("config_hash"))
        throw Error(Err::BadInput, "unreadable checkpoint file");
      if (ck.at("config_hash").get<uint64_t>() != options.config_hash)
        throw Error(Err::ConfigMismatchOnResume, "checkpoint was written under a different config");
      start_pair = ck.at("next_pair").get<int>();
      for (const auto& h : ck.at("hits"))
        report.hits.push_back({h.at("certificate"), h.at("order"), h.at("oddness"), h.at("zeta")});
      for (const auto& a : ck.at("audits")) report.audits.push_back(audit_from_json(a));
      for (const auto& h : report.hits) hit_certs.insert(h.certificate);
      report.pairs_resumed = start_pair;
    }
  }

  auto save_checkpoint = [&](int next_pair) {
    if (options.checkpoint_path.empty()) return;
    json ck;
    ck["version"] = 1;
    ck["config_hash"] = options.config_hash;
    ck["next_pair"] = next_pair;
    ck["hits"] = json::array();
    for (const auto& h : report.hits)
      ck["hits"].push_back(
          {{"certificate", h.certificate}, {"order", h.order}, {"oddness", h.oddness}, {"zeta", h.zeta}});
    ck["audits"] = json::array();
    for (const auto& a : report.audits) ck["audits"].push_back(audit_to_json(a));
    std::ofstream out(options.checkpoint_path, std::ios::trunc);
    out << ck.dump() << '\n';
  };

  for (int pi = start_pair; pi < static_cast<int>(pairs.size()); ++pi) {
    auto [i, j] = pairs[pi];
    PairAudit audit;
    audit.left = names[i];
    audit.right = names[j];
    auto t0 = std::chrono::steady_clock::now();
    FourJoinOptions fo;
    fo.orbit_pruning = options.orbit_pruning;
    fo.dedupe = true;
    fo.max_order = options.max_order;
    FourJoinStats stats =
        four_join_stream(pool[i], pool[j], fo, [&](const Multipole& g, const JoinSpec&, const std::string& cert) {
          if (is_three_edge_colorable(g)) return;
          ++audit.snarks;
          if (!is_cyclically_k_edge_connected(g, 4)) return;
          ++audit.zeta_ge_4;
          OddnessResult om = oddness(g);
          if (om.oddness < 4) return;
          ++audit.omega_ge_4;
          if (hit_certs.insert(cert).second) {
            auto z = cyclic_connectivity(g);
            report.hits.push_back({cert, g.order(), om.oddness, z.zeta});
          }
        });
    audit.joins_enumerated = stats.joins_enumerated;
    audit.simple_outputs = stats.simple_outputs;
    audit.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
    report.audits.push_back(audit);
    if (!options.audit_log_path.empty()) {
      std::ofstream log(options.audit_log_path, std::ios::app);
      log << audit_to_json(audit).dump() << '\n';
    }
    save_checkpoint(pi + 1);
  }
  std::sort(report.hits.begin(), report.hits.end(),
            [](const Oddness4Hit& a, const Oddness4Hit& b) { return a.certificate < b.certificate; });
  return report;
}

}  // namespace snarklab
