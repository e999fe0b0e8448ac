#include "sccpres/impcut.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "sccpres/errors.hpp"

namespace sccp {

ImportantCutContainer important_cut_container(const DiGraph& g, std::span<const VertexId> xs,
                                              std::span<const VertexId> ys, int k, Direction dir) {
  if (k < 0) throw InputError("k must be non-negative");
  if (xs.empty() || ys.empty()) throw InputError("terminal sets must be nonempty");
  {
    auto x = membership(g.vertex_count(), xs);
    for (VertexId y : ys) {
      if (y < 0 || y >= g.vertex_count()) throw InputError("vertex out of range: " + std::to_string(y));
      if (x[y]) throw InputError("terminal sets X and Y intersect at vertex " + std::to_string(y));
    }
  }
  const DiGraph oriented = dir == Direction::out ? g : reverse(g);
  FlowNetwork net(oriented, xs, ys);

  ImportantCutContainer out;
  out.lambda = net.augment(k + 1);
  if (out.lambda > k) {
    out.outcome = ContainerOutcome::no_cuts_within_k;
    return out;
  }
  out.rounds = k - out.lambda;

  // Heads of the artificial source arcs added so far; they belong to G_i.
  std::vector<VertexId> artificial;
  for (int i = 0;; ++i) {
    auto reach = net.reaches_sink();
    std::vector<char> side(reach.size());
    for (size_t v = 0; v < reach.size(); ++v) side[v] = !reach[v];
    out.chain.push_back(members(side));
    if (i == out.rounds) break;

    // delta+ of S_i in G_i: original edges plus artificial arcs leaving S_i.
    std::vector<VertexId> new_heads;
    for (const auto& e : oriented.edges()) {
      if (side[e.tail] && !side[e.head]) new_heads.push_back(e.head);
    }
    for (VertexId v : artificial) {
      if (!side[v]) new_heads.push_back(v);
    }
    for (VertexId v : new_heads) {
      net.add_source_arc(v);
      artificial.push_back(v);
    }
    net.augment();
  }

  out.cut.side = out.chain.back();
  out.cut.direction = dir;
  out.cut.boundary = dir == Direction::out ? out_boundary(g, out.cut.side) : in_boundary(g, out.cut.side);
  return out;
}

std::vector<Cut> enumerate_important_cuts(const DiGraph& g, std::span<const VertexId> xs,
                                          std::span<const VertexId> ys, int k, Direction dir,
                                          EnumerationLimits limits) {
  const int n = g.vertex_count();
  if (n > limits.max_vertices || n > 30) {
    throw CapabilityError("important-cut enumeration limited to n <= " +
                          std::to_string(std::min(limits.max_vertices, 30)) + " (got " +
                          std::to_string(n) + ")");
  }
  if (xs.empty() || ys.empty()) throw InputError("terminal sets must be nonempty");
  auto xin = membership(n, xs);
  auto yin = membership(n, ys);
  for (int v = 0; v < n; ++v) {
    if (xin[v] && yin[v]) throw InputError("terminal sets X and Y intersect at vertex " + std::to_string(v));
  }
  const DiGraph oriented = dir == Direction::out ? g : reverse(g);

  using Mask = std::uint32_t;
  std::vector<Mask> out_nbrs(static_cast<size_t>(n), 0);
  for (const auto& e : oriented.edges()) out_nbrs[e.tail] |= Mask{1} << e.head;
  Mask xmask = 0;
  std::vector<int> free;
  for (int v = 0; v < n; ++v) {
    if (xin[v]) xmask |= Mask{1} << v;
    else if (!yin[v]) free.push_back(v);
  }

  struct Candidate {
    Mask side;
    int size;
  };
  std::vector<Candidate> reachable;
  const std::uint64_t combos = std::uint64_t{1} << free.size();
  for (std::uint64_t bits = 0; bits < combos; ++bits) {
    Mask side = xmask;
    for (size_t i = 0; i < free.size(); ++i) {
      if (bits >> i & 1) side |= Mask{1} << free[i];
    }
    // Closure of X inside the side: exactly the vertices reachable from X in
    // oriented - delta+(side).
    Mask reach = xmask;
    for (;;) {
      Mask next = reach;
      for (Mask r = reach; r; r &= r - 1) next |= out_nbrs[std::countr_zero(r)] & side;
      if (next == reach) break;
      reach = next;
    }
    if (reach != side) continue;
    int size = 0;
    for (const auto& e : oriented.edges()) {
      if ((side >> e.tail & 1) && !(side >> e.head & 1)) ++size;
    }
    reachable.push_back({side, size});
  }
  std::sort(reachable.begin(), reachable.end(), [](const Candidate& a, const Candidate& b) { return a.side < b.side; });

  std::vector<Cut> cuts;
  for (const auto& c : reachable) {
    if (c.size > k) continue;
    bool important = true;
    for (const auto& d : reachable) {
      if (d.side != c.side && (d.side & c.side) == c.side && d.size <= c.size) {
        important = false;
        break;
      }
    }
    if (!important) continue;
    Cut cut;
    for (int v = 0; v < n; ++v) {
      if (c.side >> v & 1) cut.side.push_back(v);
    }
    cut.direction = dir;
    cut.boundary = dir == Direction::out ? out_boundary(g, cut.side) : in_boundary(g, cut.side);
    cuts.push_back(std::move(cut));
  }
  return cuts;
}

AntiIsolationReport check_anti_isolation(const DiGraph& g, VertexId s, std::span<const VertexId> sinks,
                                         std::span<const EdgeSet> faults, int k) {
  if (sinks.size() != faults.size()) {
    throw InputError("anti-isolation: " + std::to_string(sinks.size()) + " sinks but " +
                     std::to_string(faults.size()) + " fault sets");
  }
  if (k < 0) throw InputError("k must be non-negative");
  if (s < 0 || s >= g.vertex_count()) throw InputError("vertex out of range: " + std::to_string(s));
  for (const auto& f : faults) {
    if (static_cast<int>(f.size()) > k) throw InputError("anti-isolation: fault set larger than k");
  }
  const size_t r = sinks.size();
  AntiIsolationReport report;
  report.valid_instance = true;
  VertexId src[] = {s};
  for (size_t i = 0; i < r && report.valid_instance; ++i) {
    EdgeMask alive(g.edge_count(), 1);
    for (EdgeId id : faults[i]) alive[g.position_of(id)] = 0;
    auto reach = reachable_from(g, src, alive);
    for (size_t j = 0; j < r; ++j) {
      if (static_cast<bool>(reach[sinks[j]]) != (i == j)) {
        report.valid_instance = false;
        break;
      }
    }
  }
  report.bound_holds = k >= 62 || r <= (std::uint64_t{1} << k);
  return report;
}

}  // namespace sccp
