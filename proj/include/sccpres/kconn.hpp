#pragma once

#include <cstdint>
#include <vector>

#include "sccpres/digraph.hpp"
#include "sccpres/expander.hpp"
#include "sccpres/flowcut.hpp"
#include "sccpres/preservers.hpp"

namespace sccp {

/// lambda^k(u,v) = min(flow(u,v), flow(v,u), k) for all ordered pairs; the
/// matrix is symmetric with a zero diagonal.
std::vector<std::vector<int>> kconn_matrix(const DiGraph& g, int k, const EdgeMask& alive = {});

struct DemandPair {
  VertexId u = 0;
  VertexId v = 0;
  int lambda = 0;
  friend bool operator==(const DemandPair&, const DemandPair&) = default;
};

/// Maximum spanning tree of the complete graph weighted by lambda^k.  Ties
/// go to the lexicographically smallest (u, v) with u < v.
struct DemandPairs {
  std::vector<DemandPair> pairs;  // exactly n-1 tree edges, zero weights included
};

DemandPairs demand_pairs(const DiGraph& g, int k, const EdgeMask& alive = {});

/// Min of the tree-path pair values between u and v (the value lambda^k(u,v)
/// must equal).  Returns k for u == v.
int tree_path_min(const DemandPairs& dp, int n, VertexId u, VertexId v, int k);

/// Edge-minimal k-connectivity preserver by ascending-id removal.  With
/// use_demand_pairs each removal is tested only on demand_pairs of the
/// current subgraph.
PreserverResult greedy_kconn_preserver(const DiGraph& g, int k, bool use_demand_pairs);

struct Decomposition {
  std::vector<VertexSet> parts;
  std::vector<Cut> cuts;  // sides L over all of V; R = V - L
  int q = 0;
  int k = 0;
};

int default_decomposition_q(int n, int k);

/// Splits parts along cuts (L, R) with min(|delta+(L)|, |delta-(L)|) <= k
/// and at least q part vertices on each side until every part is
/// (q-1, k)-unbreakable.
Decomposition unbreakability_decomposition(const DiGraph& g, int q, int k, UnbreakableLimits limits = {});

struct CutBoundReport {
  std::int64_t cuts_checked = 0;
  std::int64_t violations = 0;
  int bound = 0;  // 4k|P| over pairs with lambda > 0
  bool exhaustive = true;
  std::vector<VertexSet> violating_sides;
};

/// For sides L with |delta+(L)| <= k checks |delta-(L)| <= bound.  All sides
/// are scanned when 2^n - 2 <= sample_limit, otherwise sample_limit random
/// sides drawn from `seed`.
CutBoundReport check_kcritical_cut_bound(const DiGraph& h, int k, std::int64_t sample_limit = 1 << 20,
                                         std::uint64_t seed = 1);

}  // namespace sccp
