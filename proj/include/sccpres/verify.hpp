#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>

#include "sccpres/digraph.hpp"
#include "sccpres/preservers.hpp"

namespace sccp {

struct VerifyOptions {
  std::uint64_t max_fault_sets = 2'000'000;
  int shards = 1;  // contiguous colex ranges, evaluated on separate threads
};

struct FtCounterexample {
  std::pair<VertexId, VertexId> pair{-1, -1};  // (-1,-1) for the global variant
  EdgeSet faults;
  std::uint64_t index = 0;  // colex position of the fault set
};

struct FtVerdict {
  bool ok = true;
  std::optional<FtCounterexample> counterexample;
  std::uint64_t fault_sets_checked = 0;
};

/// Exhaustive check over all F ⊆ E(g) with |F| <= k of the variant's
/// condition on g - F versus H - F, H = restrict_to(g, kept).  Reports the
/// counterexample with the smallest colex index.
FtVerdict verify_ft(const DiGraph& g, std::span<const EdgeId> kept, const VariantSpec& spec, int k,
                    VerifyOptions options = {});

struct KconnVerdict {
  bool ok = true;
  std::optional<std::pair<VertexId, VertexId>> pair;
  int expected = 0;  // lambda^k in g
  int actual = 0;    // lambda^k in H
};

KconnVerdict verify_kconn(const DiGraph& g, std::span<const EdgeId> kept, int k);

/// Exact set of k-fault critical edges of g for the variant.
EdgeSet enumerate_critical_edges(const DiGraph& g, const VariantSpec& spec, int k, OracleLimits limits = {});

struct CutScanLimits {
  int max_vertices = 8;
};

/// Cut characterizations: scan every minimal symmetric (s,t)-cut S of g.
/// FT: min(|delta+_H(S)|, k+1) = min(|delta+_g(S)|, k+1).
bool verify_ft_by_cuts(const DiGraph& g, std::span<const EdgeId> kept, int k, CutScanLimits limits = {});
/// k-connectivity: |delta+_H(S)| >= lambda^k_g(s,t).
bool verify_kconn_by_cuts(const DiGraph& g, std::span<const EdgeId> kept, int k, CutScanLimits limits = {});

/// True iff F (at most `degree_bound` faults incident to any vertex) leaves
/// s, y strongly connected, removing cross_edge as well separates them, and
/// cross_edge is kept.  Throws InputError when F breaks the degree bound or
/// contains cross_edge.
bool verify_bounded_degree_witness(const DiGraph& g, std::span<const EdgeId> kept, EdgeId cross_edge,
                                   std::span<const EdgeId> faults, VertexId s, VertexId y, int degree_bound = 1);

/// Same with the fault set "every edge of failed_color".  Throws InputError
/// for a color no edge carries.
bool verify_color_witness(const DiGraph& g, std::span<const EdgeId> kept, EdgeId cross_edge, int failed_color,
                          VertexId s, VertexId y);

}  // namespace sccp
