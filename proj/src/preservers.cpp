#include "sccpres/preservers.hpp"

#include <algorithm>
#include <string>

#include "sccpres/errors.hpp"
#include "sccpres/faults.hpp"

namespace sccp {

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::all_pairs: return "all-pairs";
    case Variant::sourcewise: return "sourcewise";
    case Variant::single_source: return "single-source";
    case Variant::st: return "st";
    case Variant::global: return "global";
  }
  return "?";
}

std::optional<Variant> parse_variant(const std::string& name) {
  for (Variant v : {Variant::all_pairs, Variant::sourcewise, Variant::single_source, Variant::st, Variant::global}) {
    if (variant_name(v) == name) return v;
  }
  return std::nullopt;
}

void VariantSpec::validate(int n) const {
  auto check = [n](VertexId v, const char* what) {
    if (v < 0 || v >= n) throw InputError(std::string(what) + " vertex out of range: " + std::to_string(v));
  };
  switch (variant) {
    case Variant::all_pairs:
    case Variant::global: break;
    case Variant::single_source: check(s, "source"); break;
    case Variant::st:
      check(s, "s");
      check(t, "t");
      if (s == t) throw InputError("s-t variant needs s != t");
      break;
    case Variant::sourcewise:
      if (sources.empty()) throw InputError("sourcewise variant needs a nonempty source set");
      for (VertexId v : sources) check(v, "source");
      break;
  }
}

std::optional<std::pair<VertexId, VertexId>> first_difference(const VariantSpec& spec, const std::vector<int>& a,
                                                              const std::vector<int>& b) {
  const int n = static_cast<int>(a.size());
  auto differs = [&](VertexId x, VertexId y) { return (a[x] == a[y]) != (b[x] == b[y]); };
  switch (spec.variant) {
    case Variant::all_pairs:
      if (a == b) return std::nullopt;
      for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y) {
          if (differs(x, y)) return std::pair{x, y};
        }
      }
      return std::nullopt;
    case Variant::sourcewise:
    case Variant::single_source: {
      VertexSet one{spec.s};
      const VertexSet& srcs = spec.variant == Variant::sourcewise ? spec.sources : one;
      for (VertexId x : srcs) {
        for (int y = 0; y < n; ++y) {
          if (y != x && differs(x, y)) return std::pair{x, y};
        }
      }
      return std::nullopt;
    }
    case Variant::st:
      if (differs(spec.s, spec.t)) return std::pair{spec.s, spec.t};
      return std::nullopt;
    case Variant::global: {
      auto connected = [n](const std::vector<int>& l) {
        return std::all_of(l.begin(), l.begin() + n, [](int c) { return c == 0; });
      };
      if (connected(a) != connected(b)) return std::pair{-1, -1};
      return std::nullopt;
    }
  }
  return std::nullopt;
}

namespace {

// Criticality search for the edge at position `pe` in the subgraph of g
// given by `alive`.
class CriticalOracle {
 public:
  CriticalOracle(const DiGraph& g, const VariantSpec& spec, int k, OracleLimits limits)
      : g_(g), spec_(spec), k_(k), limits_(limits) {}

  std::optional<CriticalWitness> find(EdgeMask alive, int pe) const {
    const Edge& e = g_.at(pe);
    if (e.tail == e.head) return std::nullopt;
    std::vector<int> universe;
    for (int p = 0; p < g_.edge_count(); ++p) {
      if (p != pe && alive[p]) universe.push_back(p);
    }
    std::sort(universe.begin(), universe.end(), [&](int x, int y) { return g_.at(x).id < g_.at(y).id; });
    check_fault_budget(static_cast<int>(universe.size()), k_, limits_.max_fault_sets, "criticality check");
    std::optional<CriticalWitness> found;
    for_each_fault_set(static_cast<int>(universe.size()), k_, [&](std::uint64_t, std::span<const int> f) {
      for (int i : f) alive[universe[i]] = 0;
      auto pair = split_pair(alive, pe);
      if (pair) {
        CriticalWitness w;
        w.pair = *pair;
        for (int i : f) w.faults.push_back(g_.at(universe[i]).id);
        std::sort(w.faults.begin(), w.faults.end());
        found = std::move(w);
      }
      for (int i : f) alive[universe[i]] = 1;
      return !found;
    });
    return found;
  }

  bool still_valid(EdgeMask alive, int pe, const CriticalWitness& w) const {
    for (EdgeId id : w.faults) alive[g_.position_of(id)] = 0;
    return split_pair(alive, pe).has_value();
  }

 private:
  // Pair split by removing pe from the alive subgraph (alive[pe] is set).
  std::optional<std::pair<VertexId, VertexId>> split_pair(EdgeMask& alive, int pe) const {
    auto before = scc_labels(g_, alive);
    const Edge& e = g_.at(pe);
    if (before[e.tail] != before[e.head]) return std::nullopt;
    alive[pe] = 0;
    auto after = scc_labels(g_, alive);
    alive[pe] = 1;
    return first_difference(spec_, before, after);
  }

  const DiGraph& g_;
  const VariantSpec& spec_;
  int k_;
  OracleLimits limits_;
};

std::vector<int> positions_by_id(const DiGraph& g) {
  std::vector<int> order(static_cast<size_t>(g.edge_count()));
  for (int p = 0; p < g.edge_count(); ++p) order[p] = p;
  std::sort(order.begin(), order.end(), [&](int x, int y) { return g.at(x).id < g.at(y).id; });
  return order;
}

EdgeSet kept_ids(const DiGraph& g, const EdgeMask& alive) {
  EdgeSet out;
  for (int p = 0; p < g.edge_count(); ++p) {
    if (alive[p]) out.push_back(g.at(p).id);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

CriticalityResult is_ft_critical(const DiGraph& g, EdgeId e, const VariantSpec& spec, int k, OracleLimits limits) {
  if (k < 0) throw InputError("k must be non-negative");
  spec.validate(g.vertex_count());
  int pe = g.position_of(e);
  CriticalOracle oracle(g, spec, k, limits);
  CriticalityResult out;
  out.witness = oracle.find(EdgeMask(static_cast<size_t>(g.edge_count()), 1), pe);
  out.critical = out.witness.has_value();
  return out;
}

PreserverResult greedy_preserver_from(const DiGraph& g, EdgeSet start, const VariantSpec& spec, int k,
                                      OracleLimits limits) {
  if (k < 0) throw InputError("k must be non-negative");
  spec.validate(g.vertex_count());
  CriticalOracle oracle(g, spec, k, limits);
  EdgeMask alive = mask_keeping(g, start);
  std::vector<std::optional<CriticalWitness>> cache(static_cast<size_t>(g.edge_count()));
  const auto order = positions_by_id(g);

  PreserverResult out;
  out.spec = spec;
  out.k = k;
  out.provenance = "greedy";
  out.stats.input_edges = g.edge_count();
  for (bool changed = true; changed;) {
    changed = false;
    ++out.stats.passes;
    for (int pe : order) {
      if (!alive[pe]) continue;
      if (cache[pe] && oracle.still_valid(alive, pe, *cache[pe])) {
        ++out.stats.cache_hits;
        continue;
      }
      ++out.stats.removal_attempts;
      ++out.stats.oracle_calls;
      cache[pe] = oracle.find(alive, pe);
      if (!cache[pe]) {
        alive[pe] = 0;
        changed = true;
      }
    }
  }
  out.kept_edges = kept_ids(g, alive);
  out.stats.output_edges = static_cast<int>(out.kept_edges.size());
  return out;
}

EdgeSet scc_arborescences(const DiGraph& g) {
  auto part = scc(g);
  const int n = g.vertex_count();
  std::vector<char> used(static_cast<size_t>(g.edge_count()), 0);
  std::vector<char> seen(static_cast<size_t>(n));
  for (const auto& comp : part.components) {
    if (comp.size() < 2) continue;
    const int cid = part.component_of[comp.front()];
    for (int dir = 0; dir < 2; ++dir) {
      std::fill(seen.begin(), seen.end(), 0);
      std::vector<VertexId> queue{comp.front()};
      seen[comp.front()] = 1;
      for (size_t i = 0; i < queue.size(); ++i) {
        VertexId u = queue[i];
        auto ps = dir == 0 ? g.out_positions(u) : g.in_positions(u);
        for (int p : ps) {
          const Edge& e = g.at(p);
          VertexId w = dir == 0 ? e.head : e.tail;
          if (part.component_of[w] != cid || seen[w]) continue;
          seen[w] = 1;
          used[p] = 1;
          queue.push_back(w);
        }
      }
    }
  }
  return kept_ids(g, used);
}

PreserverResult greedy_preserver(const DiGraph& g, const VariantSpec& spec, int k, OracleLimits limits) {
  if (spec.variant == Variant::all_pairs && k == 0) {
    auto out = greedy_preserver_from(g, scc_arborescences(g), spec, k, limits);
    out.stats.input_edges = g.edge_count();
    out.provenance = "greedy(arborescence start)";
    return out;
  }
  return greedy_preserver_from(g, g.edge_ids(), spec, k, limits);
}

PreserverResult sscp(const DiGraph& g, VertexId s, int k, OracleLimits limits) {
  auto out = greedy_preserver(g, VariantSpec::single_source(s), k, limits);
  out.provenance = "sscp";
  return out;
}

namespace {

void add_stats(PreserverStats& into, const PreserverStats& from) {
  into.removal_attempts += from.removal_attempts;
  into.oracle_calls += from.oracle_calls;
  into.cache_hits += from.cache_hits;
  into.passes += from.passes;
}

}  // namespace

PreserverResult hierarchy_preserver(const DiGraph& g, int k, std::optional<HierarchyParams> params,
                                    OracleLimits limits) {
  if (k < 0) throw InputError("k must be non-negative");
  HierarchyParams p;
  if (params) {
    p = *params;
  } else {
    p.k = std::max(k, 1);
    p.q = 2 * p.k;
    p.phi = {1, 2};
    p.verify_certificates = false;
  }
  auto h = build_hierarchy(g, p);
  PreserverResult out;
  out.spec = VariantSpec::all_pairs();
  out.k = k;
  out.provenance = "hierarchy";
  out.stats.input_edges = g.edge_count();
  for (const auto& cert : h.certificates) {
    if (cert.component.size() < 2) continue;
    auto sub = induced(g, cert.component);
    VertexSet local;
    for (VertexId v : cert.terminals) local.push_back(sub.from_parent_vertex[v]);
    auto part = greedy_preserver(sub.graph, VariantSpec::sourcewise(local), k, limits);
    add_stats(out.stats, part.stats);
    for (EdgeId id : part.kept_edges) out.kept_edges.push_back(sub.to_parent_edge[id]);
  }
  out.kept_edges = normalized_edges(std::move(out.kept_edges));
  out.stats.output_edges = static_cast<int>(out.kept_edges.size());
  return out;
}

PreserverResult st_from_global(const DiGraph& g, VertexId s, VertexId t, int k, const PreserverBuilder& global_builder,
                               OracleLimits limits) {
  auto spec = VariantSpec::st(s, t);
  spec.validate(g.vertex_count());
  PreserverBuilder builder = global_builder;
  if (!builder) {
    builder = [limits](const DiGraph& h, int kk) { return greedy_preserver(h, VariantSpec::global(), kk, limits); };
  }
  const int n = g.vertex_count();
  std::vector<EdgeSpec> into_s, out_of_s;
  for (int v = 0; v < n; ++v) {
    if (v != s) into_s.push_back({v, s, std::nullopt});
    if (v != t) into_s.push_back({t, v, std::nullopt});
    if (v != s) out_of_s.push_back({s, v, std::nullopt});
    if (v != t) out_of_s.push_back({v, t, std::nullopt});
  }
  PreserverResult out;
  out.spec = spec;
  out.k = k;
  out.provenance = "st_from_global";
  out.stats.input_edges = g.edge_count();
  const EdgeId original_max = g.max_edge_id();
  for (const auto* extra : {&into_s, &out_of_s}) {
    auto aug = add_edges(g, *extra);
    auto part = builder(aug, k);
    add_stats(out.stats, part.stats);
    for (EdgeId id : part.kept_edges) {
      if (id <= original_max) out.kept_edges.push_back(id);
    }
  }
  out.kept_edges = normalized_edges(std::move(out.kept_edges));
  out.stats.output_edges = static_cast<int>(out.kept_edges.size());
  return out;
}

PreserverResult global_from_single_source(const DiGraph& g, int k, OracleLimits limits) {
  if (g.vertex_count() == 0) throw InputError("global preserver needs a nonempty vertex set");
  auto out = sscp(g, 0, k, limits);
  out.spec = VariantSpec::global();
  out.provenance = "global_from_single_source";
  return out;
}

}  // namespace sccp
