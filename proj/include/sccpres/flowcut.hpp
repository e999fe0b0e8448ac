#pragma once

#include <optional>
#include <span>
#include <vector>

#include "sccpres/digraph.hpp"

namespace sccp {

enum class Direction { out, in };

/// One side of a vertex bipartition.  `boundary` holds the edge ids of
/// delta+(side) for Direction::out and delta-(side) for Direction::in.
struct Cut {
  VertexSet side;
  Direction direction = Direction::out;
  EdgeSet boundary;

  int size() const { return static_cast<int>(boundary.size()); }
  friend bool operator==(const Cut&, const Cut&) = default;
};

struct FlowValue {
  int value = 0;
  std::vector<std::vector<EdgeId>> witness_paths;  // edge-disjoint, each X -> Y
  std::optional<Cut> min_cut;
};

EdgeSet out_boundary(const DiGraph& g, std::span<const VertexId> side);
EdgeSet in_boundary(const DiGraph& g, std::span<const VertexId> side);
std::vector<char> membership(int n, std::span<const VertexId> set);
VertexSet members(const std::vector<char>& flags);

/// Unit-capacity residual network with an artificial super-source and
/// super-sink.  Graph vertices keep their ids; the source is node n and the
/// sink node n+1.  Terminal arcs carry capacity m+1.  Augmenting paths are
/// found by BFS exploring arcs in insertion order, which is ascending edge
/// position, so results are reproducible.
class FlowNetwork {
 public:
  FlowNetwork(const DiGraph& g, std::span<const VertexId> sources, std::span<const VertexId> sinks,
              const EdgeMask& alive = {});

  /// Adds a unit arc source -> v (tag kArtificial).  Existing flow stays valid.
  void add_source_arc(VertexId v);

  /// Augments until maximum or until the total reaches `cap`.  Returns total.
  int augment(std::optional<int> cap = std::nullopt);
  int flow() const { return flow_; }

  /// Graph vertices from which the sink is reachable in the residual network.
  std::vector<char> reaches_sink() const;
  /// Graph vertices reachable from the source in the residual network.
  std::vector<char> reached_from_source() const;

  /// Edge-disjoint source -> sink paths as lists of graph edge ids
  /// (artificial and terminal arcs omitted).  Flow cycles are cancelled.
  std::vector<std::vector<EdgeId>> decompose() const;

  static constexpr int kTerminal = -1;
  static constexpr int kArtificial = -2;

 private:
  int add_arc(int from, int to, int cap, int tag);

  const DiGraph* g_;
  int n_;
  int source_, sink_;
  int big_;
  std::vector<int> head_, cap_, tag_;
  std::vector<std::vector<int>> adj_;
  int flow_ = 0;
};

/// flow(G, X, Y), optionally clamped at `cap`.  Throws InputError when X and
/// Y intersect or either is empty.
FlowValue max_flow(const DiGraph& g, std::span<const VertexId> xs, std::span<const VertexId> ys,
                   std::optional<int> cap = std::nullopt, bool with_witness = false);

/// Value only; cheaper than max_flow.
int flow_value(const DiGraph& g, std::span<const VertexId> xs, std::span<const VertexId> ys,
               std::optional<int> cap = std::nullopt, const EdgeMask& alive = {});
int flow_value(const DiGraph& g, VertexId s, VertexId t, std::optional<int> cap = std::nullopt,
               const EdgeMask& alive = {});

/// min(flow(s,t), flow(t,s), k).
int symmetric_connectivity(const DiGraph& g, VertexId s, VertexId t, int k, const EdgeMask& alive = {});

/// Farthest minimum (X,Y)-cut: side = V minus the vertices that can reach Y
/// in the final residual graph.  When flow is zero this is the set of
/// vertices that cannot reach Y.
Cut farthest_min_cut(const DiGraph& g, std::span<const VertexId> xs, std::span<const VertexId> ys);

/// Shrinks an (X,Y)-cut to the vertices reachable from X in g - delta+(S).
Cut canonicalize_out_reachable(const DiGraph& g, const Cut& cut, std::span<const VertexId> xs,
                               std::span<const VertexId> ys);
/// Mirror image: vertices that reach X in g - delta-(S).
Cut canonicalize_in_reachable(const DiGraph& g, const Cut& cut, std::span<const VertexId> xs,
                              std::span<const VertexId> ys);

bool is_out_reachable(const DiGraph& g, std::span<const VertexId> side, std::span<const VertexId> xs);
bool is_in_reachable(const DiGraph& g, std::span<const VertexId> side, std::span<const VertexId> xs);

}  // namespace sccp
