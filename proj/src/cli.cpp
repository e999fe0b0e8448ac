#include "sccpres/cli.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sccpres/errors.hpp"
#include "sccpres/expander.hpp"
#include "sccpres/families.hpp"
#include "sccpres/fpt.hpp"
#include "sccpres/impcut.hpp"
#include "sccpres/kconn.hpp"
#include "sccpres/preservers.hpp"
#include "sccpres/verify.hpp"

namespace sccp::cli {

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t fault_limit() {
  if (const char* env = std::getenv("SCCP_MAX_FAULT_SETS")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 2'000'000;
}

std::string hex64(std::uint64_t h) {
  std::ostringstream s;
  s << std::hex << std::setw(16) << std::setfill('0') << h;
  return s.str();
}

Rational parse_phi(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return {std::stol(text), 1};
    return {std::stol(text.substr(0, slash)), std::stol(text.substr(slash + 1))};
  } catch (const std::exception&) {
    throw UsageError("cannot parse phi '" + text + "'; expected a/b");
  }
}

std::optional<Json> read_sidecar(const std::string& graph_path) {
  std::ifstream in(graph_path + ".meta.json");
  if (!in) return std::nullopt;
  try {
    return Json::parse(in);
  } catch (const Json::parse_error&) {
    return std::nullopt;
  }
}

Json input_block(const std::string& path, const DiGraph& g) {
  return Json{{"path", path}, {"hash", hex64(graph_hash(g))}, {"n", g.vertex_count()}, {"m", g.edge_count()}};
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

struct Common {
  std::string graph;
  bool json = false;
  bool timing = false;
  std::string output;
};

void add_common(CLI::App* sub, Common& c, bool graph = true) {
  if (graph) {
    sub->add_option("graph,--graph", c.graph, "input graph file");
  }
  sub->add_flag("--json", c.json, "print machine-readable JSON on stdout");
  sub->add_flag("--timing", c.timing, "include wall time in the JSON output");
}

DiGraph load(const Common& c) {
  if (c.graph.empty()) throw UsageError("missing input graph");
  return read_graph_file(c.graph);
}

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Variant flags shared by build, verify and critical.
struct VariantFlags {
  std::string variant;
  int k = -1;
  int s = -1;
  int t = -1;
  std::vector<int> sources;
};

void add_variant(CLI::App* sub, VariantFlags& v) {
  sub->add_option("--variant", v.variant, "all-pairs|single-source|st|global|sourcewise|kconn");
  sub->add_option("-k", v.k, "fault / connectivity budget");
  sub->add_option("-s,--source", v.s, "source vertex");
  sub->add_option("-t,--target", v.t, "target vertex");
  sub->add_option("--sources", v.sources, "source set for sourcewise")->delimiter(',');
}

// Fills missing s / t from the graph's metadata sidecar.
void default_from_sidecar(VariantFlags& v, const std::string& graph_path) {
  if (v.s >= 0 && v.t >= 0) return;
  auto meta = read_sidecar(graph_path);
  if (!meta) return;
  if (v.s < 0 && meta->contains("s")) v.s = (*meta)["s"].get<int>();
  if (v.t < 0 && meta->contains("t")) v.t = (*meta)["t"].get<int>();
}

VariantSpec to_spec(const VariantFlags& v) {
  auto parsed = parse_variant(v.variant);
  if (!parsed) throw UsageError("unknown variant '" + v.variant + "'");
  switch (*parsed) {
    case Variant::all_pairs: return VariantSpec::all_pairs();
    case Variant::global: return VariantSpec::global();
    case Variant::single_source:
      if (v.s < 0) throw UsageError("single-source needs -s");
      return VariantSpec::single_source(v.s);
    case Variant::st:
      if (v.s < 0 || v.t < 0) throw UsageError("st needs -s and -t");
      return VariantSpec::st(v.s, v.t);
    case Variant::sourcewise:
      if (v.sources.empty()) throw UsageError("sourcewise needs --sources");
      return VariantSpec::sourcewise(v.sources);
  }
  throw UsageError("unknown variant");
}

Json spec_json(const VariantSpec& spec) {
  Json j{{"variant", variant_name(spec.variant)}};
  if (spec.s >= 0) j["s"] = spec.s;
  if (spec.t >= 0) j["t"] = spec.t;
  if (!spec.sources.empty()) j["sources"] = spec.sources;
  return j;
}

Json stats_json(const PreserverStats& s) {
  return Json{{"removal_attempts", s.removal_attempts},
              {"oracle_calls", s.oracle_calls},
              {"cache_hits", s.cache_hits},
              {"passes", s.passes}};
}

// ---- gen -------------------------------------------------------------------

struct GenOpts {
  std::string family;
  std::string output;
  int k = 2, y = 1, x = 2, layers = 1, n = 8, m = 12;
  std::uint64_t seed = 1;
  bool strongly_connected = false;
  bool json = false;
};

int do_gen(const GenOpts& o, std::ostream& out, std::ostream& err) {
  std::optional<FamilyInstance> inst;
  DiGraph g;
  if (o.family == "baswana") inst = gen_baswana_tree(o.k, o.y);
  else if (o.family == "st-lower") inst = gen_st_lower(o.layers, o.k);
  else if (o.family == "bounded-degree") inst = gen_bounded_degree_lower(o.x, o.y);
  else if (o.family == "color") inst = gen_color_fault_lower(o.x, o.y);
  else if (o.family == "random") g = gen_random(o.n, o.m, o.seed, o.strongly_connected);
  else throw UsageError("unknown family '" + o.family + "'");
  if (inst) g = inst->graph;

  if (o.output.empty()) {
    out << serialize_graph(g);
  } else {
    write_graph_file(g, o.output);
    if (inst) {
      std::ofstream meta(o.output + ".meta.json");
      meta << inst->metadata_json();
      if (!meta) throw InputError("cannot write " + o.output + ".meta.json");
    }
  }
  err << "generated " << o.family << ": n=" << g.vertex_count() << " m=" << g.edge_count();
  if (inst) err << " cross_edges=" << inst->cross_edges.size();
  err << "\n";
  if (o.json && !o.output.empty()) {
    Json j{{"command", "gen"}, {"family", o.family}, {"output", o.output}, {"hash", hex64(graph_hash(g))},
           {"n", g.vertex_count()}, {"m", g.edge_count()}};
    if (o.family == "random") j["seed"] = o.seed;
    if (inst) j["cross_edges"] = inst->cross_edges;
    emit(out, j);
  }
  return kOk;
}

// ---- build -----------------------------------------------------------------

struct BuildOpts {
  Common c;
  VariantFlags v;
  std::string algo = "greedy";
  std::uint64_t seed = 1;
  std::optional<int> stop_threshold;
  bool demand_pairs = false;
};

int do_build(BuildOpts o, std::ostream& out, std::ostream& err) {
  DiGraph g = load(o.c);
  if (o.v.k < 0) throw UsageError("build needs -k");
  if (o.v.variant.empty()) o.v.variant = "all-pairs";
  const OracleLimits limits{fault_limit()};
  auto start = Clock::now();
  PreserverResult res;
  Json params;
  if (o.v.variant == "kconn") {
    if (o.algo != "greedy") throw UsageError("kconn supports --algo greedy only");
    res = greedy_kconn_preserver(g, o.v.k, o.demand_pairs);
    params = Json{{"variant", "kconn"}, {"demand_pairs", o.demand_pairs}};
  } else {
    default_from_sidecar(o.v, o.c.graph);
    VariantSpec spec = to_spec(o.v);
    if (o.algo == "greedy") {
      res = greedy_preserver(g, spec, o.v.k, limits);
    } else if (o.algo == "hierarchy") {
      if (spec.variant != Variant::all_pairs) throw UsageError("hierarchy builds all-pairs preservers only");
      res = hierarchy_preserver(g, o.v.k, std::nullopt, limits);
    } else if (o.algo == "fpt") {
      if (spec.variant != Variant::all_pairs) throw UsageError("fpt builds all-pairs preservers only");
      FptOptions fo;
      fo.stop_threshold = o.stop_threshold;
      res = fpt_preserver(g, o.v.k, o.seed, fo, limits);
    } else if (o.algo == "reduction") {
      if (spec.variant == Variant::st) res = st_from_global(g, spec.s, spec.t, o.v.k, {}, limits);
      else if (spec.variant == Variant::global) res = global_from_single_source(g, o.v.k, limits);
      else throw UsageError("reduction supports st and global only");
    } else {
      throw UsageError("unknown algo '" + o.algo + "'");
    }
    params = spec_json(spec);
  }
  const double ms = ms_since(start);
  params["algo"] = o.algo;
  params["k"] = o.v.k;
  if (o.algo == "fpt") {
    params["seed"] = o.seed;
    if (o.stop_threshold) params["stop_threshold"] = *o.stop_threshold;
  }

  err << "build " << o.v.variant << "/" << o.algo << " k=" << o.v.k << ": kept " << res.kept_edges.size() << " of "
      << g.edge_count() << " edges (" << std::fixed << std::setprecision(1) << ms << " ms)\n";
  Json j{{"command", "build"},
         {"input", input_block(o.c.graph, g)},
         {"params", params},
         {"seed", res.seed ? Json(*res.seed) : Json(nullptr)},
         {"kept_edges", res.kept_edges},
         {"sizes", {{"input_edges", g.edge_count()}, {"output_edges", res.kept_edges.size()}}},
         {"provenance", res.provenance},
         {"stats", stats_json(res.stats)},
         {"reseeds", res.reseeds}};
  if (o.c.timing) j["wall_time_ms"] = ms;
  if (!o.c.output.empty()) {
    std::ofstream f(o.c.output);
    f << j.dump(2) << "\n";
    if (!f) throw InputError("cannot write " + o.c.output);
  }
  if (o.c.json) emit(out, j);
  return kOk;
}

// ---- verify ----------------------------------------------------------------

struct VerifyOpts {
  Common c;
  VariantFlags v;
  std::string preserver;
  bool by_cuts = false;
  int shards = 1;
};

int do_verify(VerifyOpts o, std::ostream& out, std::ostream& err) {
  DiGraph g = load(o.c);
  if (o.preserver.empty()) throw UsageError("verify needs --preserver");
  std::ifstream in(o.preserver);
  if (!in) throw InputError("cannot open " + o.preserver);
  Json pj;
  try {
    pj = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError("preserver file is not JSON: " + std::string(e.what()));
  }
  if (!pj.contains("kept_edges")) throw InputError("preserver JSON lacks kept_edges");
  EdgeSet kept = pj["kept_edges"].get<EdgeSet>();
  // Parameters not given on the command line come from the build record.
  if (pj.contains("params")) {
    const auto& p = pj["params"];
    if (o.v.variant.empty() && p.contains("variant")) o.v.variant = p["variant"].get<std::string>();
    if (o.v.k < 0 && p.contains("k")) o.v.k = p["k"].get<int>();
    if (o.v.s < 0 && p.contains("s")) o.v.s = p["s"].get<int>();
    if (o.v.t < 0 && p.contains("t")) o.v.t = p["t"].get<int>();
    if (o.v.sources.empty() && p.contains("sources")) o.v.sources = p["sources"].get<std::vector<int>>();
  }
  if (o.v.k < 0) throw UsageError("verify needs -k");
  if (o.v.variant.empty()) o.v.variant = "all-pairs";

  auto start = Clock::now();
  Json j{{"command", "verify"}, {"input", input_block(o.c.graph, g)}};
  bool ok = false;
  if (o.v.variant == "kconn") {
    j["params"] = Json{{"variant", "kconn"}, {"k", o.v.k}, {"by_cuts", o.by_cuts}};
    if (o.by_cuts) {
      ok = verify_kconn_by_cuts(g, kept, o.v.k);
    } else {
      auto verdict = verify_kconn(g, kept, o.v.k);
      ok = verdict.ok;
      if (verdict.pair) {
        j["counterexample"] = Json{{"pair", {verdict.pair->first, verdict.pair->second}},
                                   {"expected", verdict.expected},
                                   {"actual", verdict.actual}};
      }
    }
  } else {
    default_from_sidecar(o.v, o.c.graph);
    VariantSpec spec = to_spec(o.v);
    Json params = spec_json(spec);
    params["k"] = o.v.k;
    params["by_cuts"] = o.by_cuts;
    j["params"] = params;
    if (o.by_cuts) {
      if (spec.variant != Variant::all_pairs) throw UsageError("--by-cuts checks the all-pairs variant only");
      ok = verify_ft_by_cuts(g, kept, o.v.k);
    } else {
      auto verdict = verify_ft(g, kept, spec, o.v.k, {fault_limit(), o.shards});
      ok = verdict.ok;
      j["fault_sets_checked"] = verdict.fault_sets_checked;
      if (verdict.counterexample) {
        const auto& c = *verdict.counterexample;
        j["counterexample"] = Json{{"pair", {c.pair.first, c.pair.second}}, {"faults", c.faults}};
      }
    }
  }
  const double ms = ms_since(start);
  j["kept_edges"] = kept.size();
  j["ok"] = ok;
  if (o.c.timing) j["wall_time_ms"] = ms;
  err << "verify " << o.v.variant << " k=" << o.v.k << ": " << (ok ? "ok" : "FAILED") << " (" << std::fixed
      << std::setprecision(1) << ms << " ms)\n";
  if (o.c.json) emit(out, j);
  return ok ? kOk : kVerificationFailed;
}

// ---- hierarchy / decompose / impcut / critical -------------------------------

struct HierOpts {
  Common c;
  int q = 2, k = 1;
  std::string phi = "1/2";
  int exact_limit = 18;
};

int do_hierarchy(const HierOpts& o, std::ostream& out, std::ostream& err) {
  DiGraph g = load(o.c);
  HierarchyParams p;
  p.q = o.q;
  p.k = o.k;
  p.phi = parse_phi(o.phi);
  p.exact_cut_limit = o.exact_limit;
  auto h = build_hierarchy(g, p);
  Json certs = Json::array();
  for (const auto& c : h.certificates) {
    Json cj{{"level", c.level + 1}, {"component", c.component}, {"terminals", c.terminals}, {"exact", c.exact}};
    cj["unbreakable"] = c.unbreakable ? Json(*c.unbreakable) : Json(nullptr);
    certs.push_back(cj);
  }
  Json j{{"command", "hierarchy"},
         {"input", input_block(o.c.graph, g)},
         {"params", {{"q", o.q}, {"k", o.k}, {"phi", std::to_string(p.phi.num) + "/" + std::to_string(p.phi.den)}}},
         {"levels", h.levels},
         {"certificates", certs}};
  err << "hierarchy: " << h.levels.size() << " levels\n";
  if (o.c.json) emit(out, j);
  return kOk;
}

struct DecompOpts {
  Common c;
  int q = -1, k = 1;
};

int do_decompose(const DecompOpts& o, std::ostream& out, std::ostream& err) {
  DiGraph g = load(o.c);
  int q = o.q > 0 ? o.q : default_decomposition_q(g.vertex_count(), o.k);
  auto d = unbreakability_decomposition(g, q, o.k);
  Json cuts = Json::array();
  for (const auto& c : d.cuts) {
    cuts.push_back(Json{{"side", c.side}, {"direction", c.direction == Direction::out ? "out" : "in"},
                        {"boundary", c.boundary}});
  }
  Json j{{"command", "decompose"},
         {"input", input_block(o.c.graph, g)},
         {"params", {{"q", q}, {"k", o.k}}},
         {"parts", d.parts},
         {"cuts", cuts}};
  err << "decompose q=" << q << " k=" << o.k << ": " << d.parts.size() << " parts, " << d.cuts.size() << " cuts\n";
  if (o.c.json) emit(out, j);
  return kOk;
}

struct ImpOpts {
  Common c;
  std::vector<int> from, to;
  int k = 1;
  std::string direction = "out";
  bool enumerate = false;
};

int do_impcut(const ImpOpts& o, std::ostream& out, std::ostream& err) {
  DiGraph g = load(o.c);
  if (o.from.empty() || o.to.empty()) throw UsageError("impcut needs --from and --to");
  Direction dir;
  if (o.direction == "out") dir = Direction::out;
  else if (o.direction == "in") dir = Direction::in;
  else throw UsageError("direction must be out or in");
  auto c = important_cut_container(g, o.from, o.to, o.k, dir);
  Json j{{"command", "impcut"},
         {"input", input_block(o.c.graph, g)},
         {"params", {{"from", o.from}, {"to", o.to}, {"k", o.k}, {"direction", o.direction}}},
         {"lambda", c.lambda}};
  if (c.has_cut()) {
    j["outcome"] = "container";
    j["side"] = c.cut.side;
    j["boundary"] = c.cut.boundary;
    j["chain"] = c.chain;
  } else {
    j["outcome"] = "no_cuts_within_k";
  }
  if (o.enumerate) {
    Json list = Json::array();
    for (const auto& cut : enumerate_important_cuts(g, o.from, o.to, o.k, dir)) {
      list.push_back(Json{{"side", cut.side}, {"boundary", cut.boundary}});
    }
    j["important_cuts"] = list;
  }
  err << "impcut: lambda=" << c.lambda;
  if (c.has_cut()) err << " container boundary=" << c.cut.boundary.size();
  else err << " (flow exceeds k)";
  err << "\n";
  if (o.c.json) emit(out, j);
  return kOk;
}

struct CritOpts {
  Common c;
  VariantFlags v;
};

int do_critical(CritOpts o, std::ostream& out, std::ostream& err) {
  DiGraph g = load(o.c);
  if (o.v.k < 0) throw UsageError("critical needs -k");
  if (o.v.variant.empty()) o.v.variant = "all-pairs";
  default_from_sidecar(o.v, o.c.graph);
  VariantSpec spec = to_spec(o.v);
  auto edges = enumerate_critical_edges(g, spec, o.v.k, {fault_limit()});
  Json params = spec_json(spec);
  params["k"] = o.v.k;
  Json j{{"command", "critical"}, {"input", input_block(o.c.graph, g)}, {"params", params}, {"critical_edges", edges}};
  err << "critical: " << edges.size() << " of " << g.edge_count() << " edges\n";
  if (o.c.json) emit(out, j);
  return kOk;
}

// ---- bench -----------------------------------------------------------------

struct BenchOpts {
  Common c;
  int count = 10;
  int k = 1;
  std::uint64_t seed = 1;
};

int do_bench(const BenchOpts& o, std::ostream& out, std::ostream& err) {
  struct Row {
    std::string name;
    std::int64_t total = 0;
    int min = 1 << 30, max = 0;
    int verified = 0;
  };
  std::vector<Row> rows;
  auto record = [&](const std::string& name, const DiGraph& g, const PreserverResult& r, const VariantSpec& spec) {
    auto it = std::find_if(rows.begin(), rows.end(), [&](const Row& x) { return x.name == name; });
    if (it == rows.end()) {
      rows.push_back({name});
      it = rows.end() - 1;
    }
    const int size = static_cast<int>(r.kept_edges.size());
    it->total += size;
    it->min = std::min(it->min, size);
    it->max = std::max(it->max, size);
    if (verify_ft(g, r.kept_edges, spec, o.k, {fault_limit(), 1}).ok) ++it->verified;
  };
  const OracleLimits limits{fault_limit()};
  std::int64_t input_total = 0;
  for (int i = 0; i < o.count; ++i) {
    const int n = 6 + i % 3;
    DiGraph g = gen_random(n, 20 - n, derive_seed(o.seed, static_cast<std::uint64_t>(i)), true);
    input_total += g.edge_count();
    record("all-pairs/greedy", g, greedy_preserver(g, VariantSpec::all_pairs(), o.k, limits), VariantSpec::all_pairs());
    record("all-pairs/hierarchy", g, hierarchy_preserver(g, o.k, std::nullopt, limits), VariantSpec::all_pairs());
    record("all-pairs/fpt", g, fpt_preserver(g, o.k, o.seed, {}, limits), VariantSpec::all_pairs());
    record("sourcewise/greedy", g, greedy_preserver(g, VariantSpec::sourcewise({0, 1}), o.k, limits),
           VariantSpec::sourcewise({0, 1}));
    record("single-source/greedy", g, sscp(g, 0, o.k, limits), VariantSpec::single_source(0));
    record("st/greedy", g, greedy_preserver(g, VariantSpec::st(0, 1), o.k, limits), VariantSpec::st(0, 1));
    record("st/reduction", g, st_from_global(g, 0, 1, o.k, {}, limits), VariantSpec::st(0, 1));
    record("global/greedy", g, greedy_preserver(g, VariantSpec::global(), o.k, limits), VariantSpec::global());
    record("global/reduction", g, global_from_single_source(g, o.k, limits), VariantSpec::global());
  }
  Json table = Json::array();
  err << "corpus: " << o.count << " random strongly connected graphs, k=" << o.k
      << ", mean m=" << (o.count ? static_cast<double>(input_total) / o.count : 0.0) << "\n";
  err << std::left << std::setw(24) << "variant/algo" << std::right << std::setw(8) << "mean" << std::setw(6)
      << "min" << std::setw(6) << "max" << std::setw(10) << "verified\n";
  for (const auto& r : rows) {
    const double mean = o.count ? static_cast<double>(r.total) / o.count : 0.0;
    err << std::left << std::setw(24) << r.name << std::right << std::setw(8) << std::fixed << std::setprecision(2)
        << mean << std::setw(6) << r.min << std::setw(6) << r.max << std::setw(6) << r.verified << "/" << o.count
        << "\n";
    table.push_back(Json{{"name", r.name}, {"mean", mean}, {"min", r.min}, {"max", r.max}, {"verified", r.verified}});
  }
  if (o.c.json) {
    emit(out, Json{{"command", "bench"}, {"params", {{"count", o.count}, {"k", o.k}, {"seed", o.seed}}},
                   {"rows", table}});
  }
  for (const auto& r : rows) {
    if (r.verified != o.count) return kVerificationFailed;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fault-tolerant strong-connectivity preservers: build, verify, analyze"};
  app.name(args.empty() ? "scc-preserve" : args[0]);
  app.require_subcommand(1);

  GenOpts gen;
  auto* gen_cmd = app.add_subcommand("gen", "generate a graph family");
  gen_cmd->add_option("family", gen.family, "baswana|st-lower|bounded-degree|color|random")->required();
  gen_cmd->add_option("-o,--output", gen.output, "graph file (a .meta.json sidecar is written next to it)");
  gen_cmd->add_option("-k", gen.k, "tree depth (baswana) or even fault budget (st-lower)");
  gen_cmd->add_option("-y,--y", gen.y, "number of Y vertices");
  gen_cmd->add_option("-x,--x", gen.x, "number of leaves (power of two)");
  gen_cmd->add_option("--layers", gen.layers, "st-lower layers");
  gen_cmd->add_option("-n", gen.n, "random: vertices");
  gen_cmd->add_option("-m", gen.m, "random: extra edges");
  gen_cmd->add_option("--seed", gen.seed, "random: seed");
  gen_cmd->add_flag("--strongly-connected", gen.strongly_connected, "random: add a Hamiltonian cycle first");
  gen_cmd->add_flag("--json", gen.json, "print JSON summary");

  BuildOpts build;
  auto* build_cmd = app.add_subcommand("build", "construct a preserver");
  add_common(build_cmd, build.c);
  add_variant(build_cmd, build.v);
  build_cmd->add_option("--algo", build.algo, "greedy|hierarchy|fpt|reduction");
  build_cmd->add_option("--seed", build.seed, "fpt seed");
  build_cmd->add_option("--stop-threshold", build.stop_threshold, "fpt: stop at this many edges");
  build_cmd->add_flag("--demand-pairs", build.demand_pairs, "kconn: test removals on demand pairs only");
  build_cmd->add_option("-o,--output", build.c.output, "write the JSON record to a file");

  VerifyOpts verify;
  auto* verify_cmd = app.add_subcommand("verify", "check a preserver exhaustively");
  add_common(verify_cmd, verify.c);
  add_variant(verify_cmd, verify.v);
  verify_cmd->add_option("--preserver", verify.preserver, "JSON with kept_edges (build output)");
  verify_cmd->add_flag("--by-cuts", verify.by_cuts, "use the cut characterization");
  verify_cmd->add_option("--shards", verify.shards, "split fault enumeration across threads");

  HierOpts hier;
  auto* hier_cmd = app.add_subcommand("hierarchy", "directed expander hierarchy");
  add_common(hier_cmd, hier.c);
  hier_cmd->add_option("-q", hier.q, "unbreakability q");
  hier_cmd->add_option("-k", hier.k, "unbreakability k");
  hier_cmd->add_option("--phi", hier.phi, "expansion target a/b");
  hier_cmd->add_option("--exact-limit", hier.exact_limit, "max vertices for exact sparse-cut search");

  DecompOpts dec;
  auto* dec_cmd = app.add_subcommand("decompose", "two-level unbreakability decomposition");
  add_common(dec_cmd, dec.c);
  dec_cmd->add_option("-q", dec.q, "part size threshold (default ceil(sqrt(nk)))");
  dec_cmd->add_option("-k", dec.k, "cut size bound");

  ImpOpts imp;
  auto* imp_cmd = app.add_subcommand("impcut", "important cut container");
  add_common(imp_cmd, imp.c);
  imp_cmd->add_option("--from", imp.from, "X")->delimiter(',');
  imp_cmd->add_option("--to", imp.to, "Y")->delimiter(',');
  imp_cmd->add_option("-k", imp.k, "cut budget");
  imp_cmd->add_option("--direction", imp.direction, "out|in");
  imp_cmd->add_flag("--enumerate", imp.enumerate, "also list important cuts exhaustively");

  CritOpts crit;
  auto* crit_cmd = app.add_subcommand("critical", "enumerate k-fault critical edges");
  add_common(crit_cmd, crit.c);
  add_variant(crit_cmd, crit.v);

  BenchOpts bench;
  auto* bench_cmd = app.add_subcommand("bench", "size table over a fixed random corpus");
  add_common(bench_cmd, bench.c, false);
  bench_cmd->add_option("--count", bench.count, "corpus size");
  bench_cmd->add_option("-k", bench.k, "fault budget");
  bench_cmd->add_option("--seed", bench.seed, "corpus seed");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (gen_cmd->parsed()) return do_gen(gen, out, err);
    if (build_cmd->parsed()) return do_build(build, out, err);
    if (verify_cmd->parsed()) return do_verify(verify, out, err);
    if (hier_cmd->parsed()) return do_hierarchy(hier, out, err);
    if (dec_cmd->parsed()) return do_decompose(dec, out, err);
    if (imp_cmd->parsed()) return do_impcut(imp, out, err);
    if (crit_cmd->parsed()) return do_critical(crit, out, err);
    if (bench_cmd->parsed()) return do_bench(bench, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kUsage;
  } catch (const CapabilityError& e) {
    err << "capability limit: " << e.what() << "\n";
    return kCapability;
  }
  return kUsage;
}

}  // namespace sccp::cli
