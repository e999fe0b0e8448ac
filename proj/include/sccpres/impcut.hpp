#pragma once

#include <optional>
#include <span>
#include <vector>

#include "sccpres/digraph.hpp"
#include "sccpres/flowcut.hpp"

namespace sccp {

enum class ContainerOutcome {
  container,         // `cut` holds the container
  no_cuts_within_k,  // flow(X,Y) > k, so no (X,Y)-cut of size <= k exists
};

struct ImportantCutContainer {
  ContainerOutcome outcome = ContainerOutcome::container;
  int lambda = 0;  // flow(X,Y) in the oriented graph, clamped at k+1
  int rounds = 0;  // k - lambda
  Cut cut;         // boundary reported against g's edge ids
  /// Sides S_0 ⊆ S_1 ⊆ ... of the farthest min cuts of the augmented graphs.
  std::vector<VertexSet> chain;

  bool has_cut() const { return outcome == ContainerOutcome::container; }
};

/// Single cut whose side contains every important (X,Y)-cut of size <= k.
///
/// Direction::out works on g; Direction::in works on reverse(g), so the
/// returned side then contains every in-reachable cut and the boundary is
/// delta-(side) in g.  With lambda = flow(X,Y) <= k the boundary has at most
/// lambda * 2^(k-lambda) edges.
ImportantCutContainer important_cut_container(const DiGraph& g, std::span<const VertexId> xs,
                                              std::span<const VertexId> ys, int k, Direction dir);

struct EnumerationLimits {
  int max_vertices = 16;
};

/// Exhaustive list of important (X,Y)-cuts with boundary <= k, by scanning
/// all sides.  Sides are returned in ascending bitmask order.
std::vector<Cut> enumerate_important_cuts(const DiGraph& g, std::span<const VertexId> xs,
                                          std::span<const VertexId> ys, int k, Direction dir,
                                          EnumerationLimits limits = {});

struct AntiIsolationReport {
  bool valid_instance = false;
  bool bound_holds = false;
};

/// Checks whether s reaches t_j in g - F_i exactly when i == j, and whether
/// r <= 2^k.
AntiIsolationReport check_anti_isolation(const DiGraph& g, VertexId s, std::span<const VertexId> sinks,
                                         std::span<const EdgeSet> faults, int k);

}  // namespace sccp
