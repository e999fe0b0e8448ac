#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sccpres/digraph.hpp"
#include "sccpres/expander.hpp"

namespace sccp {

enum class Variant { all_pairs, sourcewise, single_source, st, global };

std::string variant_name(Variant v);        // "all-pairs", "sourcewise", ...
std::optional<Variant> parse_variant(const std::string& name);

struct VariantSpec {
  Variant variant = Variant::all_pairs;
  VertexId s = -1;     // single_source, st
  VertexId t = -1;     // st
  VertexSet sources;   // sourcewise

  static VariantSpec all_pairs() { return {}; }
  static VariantSpec global() { return {Variant::global, -1, -1, {}}; }
  static VariantSpec single_source(VertexId s) { return {Variant::single_source, s, -1, {}}; }
  static VariantSpec st(VertexId s, VertexId t) { return {Variant::st, s, t, {}}; }
  static VariantSpec sourcewise(VertexSet u) { return {Variant::sourcewise, -1, -1, normalized(std::move(u))}; }

  /// Throws InputError when a referenced vertex is missing or s == t.
  void validate(int vertex_count) const;
  friend bool operator==(const VariantSpec&, const VariantSpec&) = default;
};

/// First pair (in the variant's fixed order) whose strong connectivity
/// differs between the two canonical SCC labelings.  For the global variant
/// the pair is (-1,-1) and means "strongly connected in one, not the other".
/// Pair order: all_pairs row-major with a < b; sourcewise by source then
/// vertex; single_source (s, v) by v; st the single pair (s, t).
std::optional<std::pair<VertexId, VertexId>> first_difference(const VariantSpec& spec, const std::vector<int>& a,
                                                              const std::vector<int>& b);

struct OracleLimits {
  std::uint64_t max_fault_sets = 2'000'000;
};

struct CriticalWitness {
  std::pair<VertexId, VertexId> pair{-1, -1};
  EdgeSet faults;
};

struct CriticalityResult {
  bool critical = false;
  std::optional<CriticalWitness> witness;
};

/// e is k-fault critical in g for the variant iff some F ⊆ E(g) - e with
/// |F| <= k leaves a relevant pair strongly connected in g - F but not in
/// g - F - e.  Fault sets are visited in colex order of edge id.
CriticalityResult is_ft_critical(const DiGraph& g, EdgeId e, const VariantSpec& spec, int k,
                                 OracleLimits limits = {});

struct PreserverStats {
  int input_edges = 0;
  int output_edges = 0;
  std::int64_t removal_attempts = 0;
  std::int64_t oracle_calls = 0;  // full fault-set enumerations
  std::int64_t cache_hits = 0;
  int passes = 0;
};

struct PreserverResult {
  EdgeSet kept_edges;
  VariantSpec spec;
  int k = 0;
  PreserverStats stats;
  std::string provenance;
  std::optional<std::uint64_t> seed;
  int reseeds = 0;
};

/// Removes edges in ascending id order while they are not critical for the
/// current subgraph, repeating passes until none is removable.
PreserverResult greedy_preserver(const DiGraph& g, const VariantSpec& spec, int k, OracleLimits limits = {});

/// Greedy preserver starting from a given edge subset (ids of g).  The
/// start must already be a valid preserver for (spec, k).
PreserverResult greedy_preserver_from(const DiGraph& g, EdgeSet start, const VariantSpec& spec, int k,
                                      OracleLimits limits = {});

/// Union of out- and in-BFS arborescences inside every SCC; a 0-fault
/// all-pairs preserver with at most 2(n-1) edges.
EdgeSet scc_arborescences(const DiGraph& g);

PreserverResult sscp(const DiGraph& g, VertexId s, int k, OracleLimits limits = {});

/// Hierarchy with q = 2k' and phi = 1/2 (k' = max(k,1)); the union of the
/// sourcewise greedy preservers of G[C] w.r.t. V_i ∩ C over all levels and
/// components.
PreserverResult hierarchy_preserver(const DiGraph& g, int k, std::optional<HierarchyParams> params = std::nullopt,
                                    OracleLimits limits = {});

using PreserverBuilder = std::function<PreserverResult(const DiGraph&, int)>;

/// s-t preserver from a global builder: run it on g + {(v,s)} + {(t,v)} and
/// on g + {(s,v)} + {(v,t)}, keep the original edges of both outputs.
PreserverResult st_from_global(const DiGraph& g, VertexId s, VertexId t, int k,
                               const PreserverBuilder& global_builder = {}, OracleLimits limits = {});

/// sscp rooted at vertex 0.
PreserverResult global_from_single_source(const DiGraph& g, int k, OracleLimits limits = {});

}  // namespace sccp
