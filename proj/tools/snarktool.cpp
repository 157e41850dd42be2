// snarktool: analyze cubic graphs, generate cyclically 4-edge-connected pools,
// run the 4-join oddness search, and sweep conjecture checkers.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "snarklab/canonical.hpp"
#include "snarklab/coloring.hpp"
#include "snarklab/composer.hpp"
#include "snarklab/conjectures.hpp"
#include "snarklab/fixtures.hpp"
#include "snarklab/generator.hpp"
#include "snarklab/graph6.hpp"
#include "snarklab/measures.hpp"
#include "snarklab/structure.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace snarklab;

namespace {

uint64_t fnv1a(const std::string& s, uint64_t h = 14695981039346656037ull) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Err::BadInput, "cannot open " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

const char* verdict_name(PoleClassification::Verdict v) {
  switch (v) {
    case PoleClassification::Verdict::Uncolourable: return "uncolourable";
    case PoleClassification::Verdict::ColourClosed: return "colour-closed";
    case PoleClassification::Verdict::ColourOpen: return "colour-open";
  }
  return "?";
}

json fragment_json(const FragmentExtension& fx) {
  json j;
  j["class"] = verdict_name(fx.classification.verdict);
  if (fx.classification.verdict == PoleClassification::Verdict::ColourOpen)
    j["kind"] = fx.classification.kind == OpenKind::Heterochromatic ? "heterochromatic" : "isochromatic";
  j["extension_order"] = fx.extension.order();
  j["extension_zeta"] = fx.zeta;
  j["extension_colorable"] = fx.extension_colorable;
  return j;
}

const char* label_name(DecompositionLabel label) {
  switch (label) {
    case DecompositionLabel::BothUncolourable: return "both-uncolourable";
    case DecompositionLabel::UncolourableHeterochromatic: return "uncolourable+heterochromatic";
    case DecompositionLabel::UncolourableIsochromatic: return "uncolourable+isochromatic";
    case DecompositionLabel::BothColourable: return "both-colourable";
  }
  return "?";
}

int cmd_analyze(const std::string& file, bool with_cuts) {
  int exit_code = 0;
  auto lines = read_lines(file);
  for (size_t i = 0; i < lines.size(); ++i) {
    Multipole g;
    try {
      g = graph6_decode(lines[i]);
      if (!g.is_cubic() || !g.is_simple() || !g.is_connected())
        throw Error(Err::NotCubic, "input graph is not simple connected cubic");
    } catch (const std::exception& e) {
      std::cerr << "line " << (i + 1) << ": " << e.what() << '\n';
      exit_code = 2;
      continue;
    }
    json rec;
    rec["graph6"] = lines[i];
    rec["order"] = g.order();
    rec["girth"] = girth(g);
    rec["cycle_rank"] = cycle_rank(g);
    auto zeta = cyclic_connectivity(g);
    rec["zeta"] = zeta.zeta;
    rec["colorable"] = is_three_edge_colorable(g);
    if (bridges(g).empty()) {
      rec["oddness"] = oddness(g).oddness;
      rec["resistance"] = resistance(g).resistance;
    } else {
      rec["oddness"] = nullptr;
      rec["resistance"] = nullptr;
    }
    if (with_cuts) {
      json cuts = json::array();
      for (const CutReport& cut : cycle_separating_cuts(g, 4)) {
        DecompositionCase dc = decompose_along_cut(g, cut.cut);
        json cj;
        cj["cut"] = cut.cut;
        cj["label"] = label_name(dc.label);
        cj["left"] = fragment_json(dc.left);
        cj["right"] = fragment_json(dc.right);
        if (dc.omega) cj["omega"] = *dc.omega;
        cuts.push_back(cj);
      }
      rec["cuts"] = cuts;
    }
    std::cout << rec.dump() << '\n';
  }
  return exit_code;
}

int cmd_generate(int order, bool snarks_only, int girth_min, const std::string& outdir) {
  fs::create_directories(outdir);
  auto levels = generate_c4ec_cubic(order);
  json summary;
  summary["target_order"] = order;
  summary["snarks_only"] = snarks_only;
  summary["girth_min"] = girth_min;
  summary["counts"] = json::array();
  for (const GenerationLevel& level : levels) {
    std::vector<std::string> emit = level.certificates;
    if (snarks_only || girth_min > 0) emit = filter_snarks(level.certificates, girth_min);
    if (!snarks_only && girth_min == 0) emit = level.certificates;
    char name[32];
    std::snprintf(name, sizeof name, "order_%02d.g6", level.order);
    std::ofstream out(fs::path(outdir) / name, std::ios::trunc);
    for (const std::string& cert : emit) out << cert << '\n';
    summary["counts"].push_back({{"order", level.order},
                                 {"classes", level.certificates.size()},
                                 {"emitted", emit.size()}});
  }
  std::ofstream sum(fs::path(outdir) / "summary.json", std::ios::trunc);
  sum << summary.dump(2) << '\n';
  return 0;
}

int cmd_join(const std::vector<std::string>& pool_files, int max_order, const std::string& outdir) {
  fs::create_directories(outdir);
  std::vector<Multipole> pool;
  std::vector<std::string> names;
  int exit_code = 0;
  for (const std::string& file : pool_files) {
    auto lines = read_lines(file);
    for (size_t i = 0; i < lines.size(); ++i) {
      try {
        Multipole g = graph6_decode(lines[i]);
        if (!g.is_cubic() || !g.is_simple()) throw Error(Err::NotCubic, "pool graph not simple cubic");
        pool.push_back(g);
        names.push_back(lines[i]);
      } catch (const std::exception& e) {
        std::cerr << file << " line " << (i + 1) << ": " << e.what() << '\n';
        exit_code = 2;
      }
    }
  }
  std::sort(names.begin(), names.end());
  uint64_t hash = fnv1a("join;max_order=" + std::to_string(max_order));
  for (const std::string& n : names) hash = fnv1a(n + ";", hash);

  Oddness4Options opt;
  opt.max_order = max_order;
  opt.audit_log_path = (fs::path(outdir) / "audit.jsonl").string();
  opt.checkpoint_path = (fs::path(outdir) / "checkpoint.json").string();
  opt.config_hash = hash;
  Oddness4Report report = oddness4_search(pool, opt);

  json summary;
  summary["pool_size"] = pool.size();
  summary["max_order"] = max_order;
  summary["pairs"] = report.pairs_total;
  long long joins = 0, simple = 0, snarks = 0, z4 = 0, o4 = 0;
  for (const PairAudit& a : report.audits) {
    joins += a.joins_enumerated;
    simple += a.simple_outputs;
    snarks += a.snarks;
    z4 += a.zeta_ge_4;
    o4 += a.omega_ge_4;
  }
  summary["joins_enumerated"] = joins;
  summary["simple_outputs"] = simple;
  summary["snarks"] = snarks;
  summary["zeta_ge_4"] = z4;
  summary["omega_ge_4"] = o4;
  summary["hits"] = json::array();
  std::ofstream hits(fs::path(outdir) / "oddness4.g6", std::ios::trunc);
  for (const Oddness4Hit& h : report.hits) {
    hits << h.certificate << '\n';
    summary["hits"].push_back(
        {{"graph6", h.certificate}, {"order", h.order}, {"oddness", h.oddness}, {"zeta", h.zeta}});
  }
  std::ofstream sum(fs::path(outdir) / "summary.json", std::ios::trunc);
  sum << summary.dump(2) << '\n';
  return exit_code;
}

int cmd_conjectures(const std::string& which, const std::string& file) {
  int exit_code = 0;
  auto lines = read_lines(file);
  for (size_t i = 0; i < lines.size(); ++i) {
    Multipole g;
    try {
      g = graph6_decode(lines[i]);
    } catch (const std::exception& e) {
      std::cerr << "line " << (i + 1) << ": " << e.what() << '\n';
      exit_code = 2;
      continue;
    }
    json rec;
    rec["index"] = i;
    rec["graph6"] = lines[i];
    try {
      if (which == "dc") {
        rec["conjecture"] = "dominating-circuit";
        auto res = has_dominating_circuit(g);
        if (res.holds && !verify_dominating_circuit(g, res.circuit))
          throw Error(Err::BadInput, "witness failed validation");
        rec["holds"] = res.holds;
        if (res.holds) rec["witness"] = res.circuit;
      } else if (which == "tc") {
        rec["conjecture"] = "total-coloring";
        auto res = total_chromatic_number(g);
        if (res.number == 4 && !verify_total_coloring(g, res.vertex_color, res.edge_color, 4))
          throw Error(Err::BadInput, "witness failed validation");
        rec["holds"] = res.number == 4;
        rec["total_chromatic_number"] = res.number;
        if (res.number == 4)
          rec["witness"] = {{"vertices", res.vertex_color}, {"edges", res.edge_color}};
      } else {
        rec["conjecture"] = "petersen-coloring";
        auto res = has_petersen_coloring(g);
        if (res.holds && !verify_petersen_coloring(g, res.edge_map))
          throw Error(Err::BadInput, "witness failed validation");
        rec["holds"] = res.holds;
        if (res.holds) rec["witness"] = res.edge_map;
      }
    } catch (const std::exception& e) {
      std::cerr << "line " << (i + 1) << ": " << e.what() << '\n';
      exit_code = 2;
      continue;
    }
    std::cout << rec.dump() << '\n';
  }
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cubic graph composition toolkit"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value config file; flags override");
  int workers = 1;
  app.add_option("--workers", workers, "worker count hint (results are identical for any value)");

  auto* analyze = app.add_subcommand("analyze", "per-graph invariants as JSON lines");
  bool with_cuts = false;
  std::string analyze_file;
  analyze->add_flag("--cuts", with_cuts, "classify every cycle-separating 4-cut");
  analyze->add_option("file", analyze_file, "graph6 input")->required();

  auto* generate = app.add_subcommand("generate", "cyclically 4-edge-connected cubic graphs");
  int gen_order = 10, girth_min = 0;
  bool snarks_only = false;
  std::string gen_outdir;
  generate->add_option("--order", gen_order, "largest order to generate")->required();
  generate->add_flag("--snarks-only", snarks_only, "emit only uncolourable graphs");
  generate->add_option("--girth-min", girth_min, "minimum girth filter");
  generate->add_option("outdir", gen_outdir, "output directory")->required();

  auto* join = app.add_subcommand("join", "4-join search for oddness >= 4 snarks");
  std::vector<std::string> pool_files;
  int max_order = 30;
  std::string join_outdir;
  join->add_option("--pool", pool_files, "graph6 pool files")->required()->expected(-1);
  join->add_option("--max-order", max_order, "largest output order")->required();
  join->add_option("outdir", join_outdir, "output directory")->required();

  auto* conjectures = app.add_subcommand("conjectures", "conjecture checkers");
  std::string which, conj_file;
  conjectures->add_option("--which", which, "dc | tc | pc")
      ->required()
      ->check(CLI::IsMember({"dc", "tc", "pc"}));
  conjectures->add_option("file", conj_file, "graph6 input")->required();

  CLI11_PARSE(app, argc, argv);
  try {
    if (*analyze) return cmd_analyze(analyze_file, with_cuts);
    if (*generate) return cmd_generate(gen_order, snarks_only, girth_min, gen_outdir);
    if (*join) return cmd_join(pool_files, max_order, join_outdir);
    if (*conjectures) return cmd_conjectures(which, conj_file);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
