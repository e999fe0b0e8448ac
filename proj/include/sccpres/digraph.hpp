#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sccp {

using VertexId = int;
using EdgeId = int;
using VertexSet = std::vector<VertexId>;  // sorted, duplicate-free
using EdgeSet = std::vector<EdgeId>;      // sorted, duplicate-free

struct Edge {
  EdgeId id = 0;
  VertexId tail = 0;
  VertexId head = 0;
  std::optional<int> color;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct EdgeSpec {
  VertexId tail = 0;
  VertexId head = 0;
  std::optional<int> color;
};

/// Directed multigraph with stable edge identities.
///
/// A freshly built graph numbers its edges 0..m-1 in insertion order.  Graphs
/// derived by deleting edges (remove_edges, restrict_to) keep the parent's
/// ids, so ids there are unique but may be sparse.  Internally every edge also
/// has a dense position 0..edge_count()-1; masks passed to the hot-path
/// routines below are indexed by position, not by id.
class DiGraph {
 public:
  DiGraph() = default;
  explicit DiGraph(int vertex_count);
  DiGraph(int vertex_count, std::span<const EdgeSpec> edges);
  DiGraph(int vertex_count, std::span<const std::pair<VertexId, VertexId>> edges);
  DiGraph(int vertex_count, std::initializer_list<std::pair<VertexId, VertexId>> edges);

  /// Builds a graph whose edges keep the given ids (used for subgraphs).
  static DiGraph with_ids(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  std::span<const Edge> edges() const { return edges_; }
  const Edge& at(int position) const { return edges_[static_cast<size_t>(position)]; }

  bool has_edge_id(EdgeId id) const;
  int position_of(EdgeId id) const;  // throws InputError for unknown ids
  const Edge& edge(EdgeId id) const { return at(position_of(id)); }

  /// Positions of out-/in-edges, ascending by position.
  std::span<const int> out_positions(VertexId v) const;
  std::span<const int> in_positions(VertexId v) const;

  EdgeSet edge_ids() const;
  EdgeId max_edge_id() const { return max_id_; }

  friend bool operator==(const DiGraph& a, const DiGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void rebuild_indexes();

  int n_ = 0;
  EdgeId max_id_ = -1;
  std::vector<Edge> edges_;
  std::vector<int> pos_of_id_;
  std::vector<int> out_start_, out_list_;
  std::vector<int> in_start_, in_list_;
};

struct SccPartition {
  std::vector<int> component_of;               // vertex -> component id
  std::vector<VertexSet> components;           // component id -> vertices
  std::vector<int> topological_order;          // component ids, sources first

  int count() const { return static_cast<int>(components.size()); }
  bool same(VertexId a, VertexId b) const { return component_of[a] == component_of[b]; }
};

/// Alive mask over edge positions; an empty mask means "all edges alive".
using EdgeMask = std::vector<char>;

SccPartition scc(const DiGraph& g);
SccPartition scc(const DiGraph& g, const EdgeMask& alive);

/// Component labels only, without materialized vertex lists.  Labels are
/// canonical: component ids are assigned in order of each component's
/// smallest vertex, so two labelings compare equal iff the partitions agree.
std::vector<int> scc_labels(const DiGraph& g, const EdgeMask& alive = {});

/// Vertices reachable from `sources` using alive edges (forward direction).
std::vector<char> reachable_from(const DiGraph& g, std::span<const VertexId> sources,
                                 const EdgeMask& alive = {});
/// Vertices that can reach `targets` using alive edges.
std::vector<char> reaching(const DiGraph& g, std::span<const VertexId> targets,
                           const EdgeMask& alive = {});

// Surgery.  All results keep the vertex set of g unless stated otherwise.
DiGraph remove_edges(const DiGraph& g, std::span<const EdgeId> faults);
DiGraph restrict_to(const DiGraph& g, std::span<const EdgeId> keep);
DiGraph reverse(const DiGraph& g);
/// Appends edges; new edges get ids max_edge_id()+1, +2, ... in list order.
DiGraph add_edges(const DiGraph& g, std::span<const EdgeSpec> extra);

struct InducedSubgraph {
  DiGraph graph;                   // dense ids 0..m'-1
  std::vector<VertexId> to_parent_vertex;
  std::vector<EdgeId> to_parent_edge;
  std::vector<VertexId> from_parent_vertex;  // -1 when not included
};
InducedSubgraph induced(const DiGraph& g, std::span<const VertexId> vertices);

/// Alive mask over g's positions that keeps exactly the listed ids.
EdgeMask mask_keeping(const DiGraph& g, std::span<const EdgeId> keep);

// Text format: "n m" header, then m lines "tail head [color]".
DiGraph parse_graph(std::istream& in);
DiGraph parse_graph_string(const std::string& text);
DiGraph read_graph_file(const std::string& path);
std::string serialize_graph(const DiGraph& g);
void write_graph_file(const DiGraph& g, const std::string& path);

/// FNV-1a over the serialized text; stable across platforms.
std::uint64_t graph_hash(const DiGraph& g);

VertexSet normalized(VertexSet s);
EdgeSet normalized_edges(EdgeSet s);

}  // namespace sccp
