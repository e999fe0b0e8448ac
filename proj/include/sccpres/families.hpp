#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sccpres/digraph.hpp"

namespace sccp {

/// A cross edge together with the fault set that makes it indispensable:
/// `pair` is strongly connected in g - faults but not in g - faults - edge.
/// For color instances `color` names the failed color and `faults` lists
/// its edges.
struct CrossWitness {
  EdgeId edge = -1;
  std::pair<VertexId, VertexId> pair{-1, -1};
  EdgeSet faults;
  std::optional<int> color;
};

struct FamilyInstance {
  std::string family;
  DiGraph graph;
  std::map<std::string, int> params;
  VertexId s = -1;
  VertexId t = -1;  // st-lower only
  VertexSet x;      // leaves (all layers for st-lower)
  VertexSet y;
  EdgeSet tree_edges;
  EdgeSet cross_edges;
  std::vector<CrossWitness> witnesses;  // one per cross edge, ascending edge id
  std::map<int, VertexId> color_leaf;   // color i -> the only reachable leaf

  /// Pretty-printed JSON sidecar.
  std::string metadata_json() const;
};

/// Out-tree of depth k from s with 2^k leaves X, all of X x Y, and Y -> s.
FamilyInstance gen_baswana_tree(int k, int y_count);

/// `layers` gadgets between s_0 = s and s_layers = t, each an out-tree of
/// depth k/2, the complete X_i x X'_i, and an in-tree of depth k/2; plus t -> s.
FamilyInstance gen_st_lower(int layers, int k_even);

/// Binary out-tree with x_count leaves (a power of two), X x Y and Y -> s.
/// Witnesses are 1-bounded-degree fault sets.
FamilyInstance gen_bounded_degree_lower(int x_count, int y_count);

/// Colored variant: failing color i leaves only leaf i reachable from s.
/// Tree edges with several colors are split into paths; X x Y and Y -> s
/// carry color 0.
FamilyInstance gen_color_fault_lower(int x_count, int y_count);

/// n + m edges: a random Hamiltonian cycle first when ensure_strongly_connected
/// (and n >= 2), then m uniform random non-loop edges.  Parallel edges allowed.
DiGraph gen_random(int n, int m, std::uint64_t seed, bool ensure_strongly_connected);

}  // namespace sccp
