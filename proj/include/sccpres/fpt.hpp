#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sccpres/digraph.hpp"
#include "sccpres/preservers.hpp"

namespace sccp {

struct CriticalContainerReport {
  EdgeSet edges;                            // E'
  std::vector<VertexSet> per_vertex_terminals;  // v -> U_v
  std::vector<int> skip_counts;             // v -> number of samples containing v
  std::vector<VertexSet> sampled_sets;      // Q_1..Q_lambda
  VertexSet u_prime;
  int sample_count = 0;                     // lambda
  std::uint64_t rng_seed = 0;
  int j_union = 0;                          // |E(J)|
};

/// ceil(50 ln n), at least 1.
int sample_count_for(int n);

/// Edge set containing, with high probability, every edge that is k-fault
/// critical w.r.t. U x V.  U must be (q, 2^k)-unbreakable in g.  Samples are
/// q-subsets of U drawn from `seed`; when |U| < q every sample is U itself.
CriticalContainerReport critical_edge_container(const DiGraph& g, std::span<const VertexId> terminals, int q, int k,
                                                std::uint64_t seed, OracleLimits limits = {});

struct FptParams {
  /// Overrides the hierarchy q; default max(ceil(2^k sqrt(max(1, ln n))), 2^(k+1)).
  std::optional<int> q;
  int exact_cut_limit = 18;
};

int fpt_default_q(int n, int k);

struct FptContainer {
  EdgeSet edges;
  int q = 0;
  int levels = 0;
  std::vector<int> per_component_sizes;  // |E'| per hierarchy certificate
  int sample_count = 0;
};

/// Union of critical_edge_container over every (level, SCC) of a hierarchy
/// built for (q, 2^k)-unbreakability with phi = 2^k / q.
FptContainer fpt_container_all_pairs(const DiGraph& g, int k, std::uint64_t seed, FptParams params = {},
                                     OracleLimits limits = {});

struct FptOptions {
  std::optional<int> stop_threshold;
  /// Confirms every removal with the exhaustive criticality oracle and throws
  /// std::logic_error on a critical removal.
  bool test_mode = false;
  /// Verify the output against g and rerun with a new seed on failure.
  bool verify_output = true;
  int max_reseeds = 1;
  FptParams params;
};

/// Repeatedly removes the lowest-id edge outside the current container.
/// `reseeds` in the result counts reruns after failed verification.
PreserverResult fpt_preserver(const DiGraph& g, int k, std::uint64_t seed, FptOptions options = {},
                              OracleLimits limits = {});

/// Deterministic child seed for stream position i.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t i);

}  // namespace sccp
