#include "sccpres/verify.hpp"

#include <algorithm>
#include <bitset>
#include <string>
#include <thread>
#include <vector>

#include "sccpres/errors.hpp"
#include "sccpres/faults.hpp"
#include "sccpres/flowcut.hpp"
#include "sccpres/kconn.hpp"

namespace sccp {

namespace {

EdgeMask kept_mask(const DiGraph& g, std::span<const EdgeId> kept) {
  EdgeMask mask(static_cast<size_t>(g.edge_count()), 0);
  for (EdgeId id : kept) {
    if (!g.has_edge_id(id)) throw InputError("preserver edge " + std::to_string(id) + " is not an edge of the graph");
    mask[g.position_of(id)] = 1;
  }
  return mask;
}

std::vector<int> positions_by_id(const DiGraph& g) {
  std::vector<int> order;
  for (EdgeId id : g.edge_ids()) order.push_back(g.position_of(id));
  return order;
}

struct ShardResult {
  std::optional<FtCounterexample> found;
  std::uint64_t checked = 0;
};

ShardResult scan_range(const DiGraph& g, const EdgeMask& hmask, const std::vector<int>& order, const VariantSpec& spec,
                       int k, std::uint64_t begin, std::uint64_t end) {
  ShardResult res;
  EdgeMask galive(static_cast<size_t>(g.edge_count()), 1);
  EdgeMask halive = hmask;
  for_each_fault_set(
      static_cast<int>(order.size()), k,
      [&](std::uint64_t index, std::span<const int> f) {
        ++res.checked;
        for (int i : f) galive[order[i]] = halive[order[i]] = 0;
        auto lg = scc_labels(g, galive);
        auto lh = scc_labels(g, halive);
        auto diff = first_difference(spec, lg, lh);
        for (int i : f) {
          galive[order[i]] = 1;
          halive[order[i]] = hmask[order[i]];
        }
        if (diff) {
          FtCounterexample c;
          c.pair = *diff;
          c.index = index;
          for (int i : f) c.faults.push_back(g.at(order[i]).id);
          std::sort(c.faults.begin(), c.faults.end());
          res.found = std::move(c);
          return false;
        }
        return true;
      },
      begin, end);
  return res;
}

}  // namespace

FtVerdict verify_ft(const DiGraph& g, std::span<const EdgeId> kept, const VariantSpec& spec, int k,
                    VerifyOptions options) {
  if (k < 0) throw InputError("k must be non-negative");
  spec.validate(g.vertex_count());
  const EdgeMask hmask = kept_mask(g, kept);
  const auto order = positions_by_id(g);
  const int m = g.edge_count();
  check_fault_budget(m, k, options.max_fault_sets, "verification");
  const std::uint64_t total = count_fault_sets(m, k);
  const int shards = std::max(1, std::min<int>(options.shards, static_cast<int>(std::min<std::uint64_t>(total, 256))));

  std::vector<ShardResult> results(static_cast<size_t>(shards));
  if (shards == 1) {
    results[0] = scan_range(g, hmask, order, spec, k, 0, total);
  } else {
    std::vector<std::thread> threads;
    for (int s = 0; s < shards; ++s) {
      std::uint64_t begin = total / shards * s + std::min<std::uint64_t>(s, total % shards);
      std::uint64_t end = begin + total / shards + (static_cast<std::uint64_t>(s) < total % shards ? 1 : 0);
      threads.emplace_back([&, s, begin, end] { results[s] = scan_range(g, hmask, order, spec, k, begin, end); });
    }
    for (auto& t : threads) t.join();
  }

  FtVerdict out;
  for (auto& r : results) {
    out.fault_sets_checked += r.checked;
    if (r.found && (!out.counterexample || r.found->index < out.counterexample->index)) {
      out.counterexample = std::move(r.found);
    }
  }
  out.ok = !out.counterexample.has_value();
  return out;
}

KconnVerdict verify_kconn(const DiGraph& g, std::span<const EdgeId> kept, int k) {
  const EdgeMask hmask = kept_mask(g, kept);
  const int n = g.vertex_count();
  KconnVerdict out;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      int want = symmetric_connectivity(g, u, v, k);
      int got = symmetric_connectivity(g, u, v, k, hmask);
      if (want != got) {
        out.ok = false;
        out.pair = std::pair{u, v};
        out.expected = want;
        out.actual = got;
        return out;
      }
    }
  }
  return out;
}

EdgeSet enumerate_critical_edges(const DiGraph& g, const VariantSpec& spec, int k, OracleLimits limits) {
  EdgeSet out;
  for (EdgeId id : g.edge_ids()) {
    if (is_ft_critical(g, id, spec, k, limits).critical) out.push_back(id);
  }
  return out;
}

namespace {

using EdgeBits = std::bitset<256>;

// Calls check(side_mask, s, t) for every minimal symmetric (s,t)-cut.
template <class Check>
bool scan_minimal_symmetric_cuts(const DiGraph& g, CutScanLimits limits, Check&& check) {
  const int n = g.vertex_count();
  // Pair bits live in one 64-bit word, so n <= 8.
  if (n > limits.max_vertices || n > 8) {
    throw CapabilityError("cut-characterization scan limited to n <= " + std::to_string(std::min(limits.max_vertices, 8)));
  }
  if (g.edge_count() > 256) throw CapabilityError("cut-characterization scan limited to m <= 256");
  if (n < 2) return true;
  const std::uint32_t full = (1u << n) - 1;
  std::vector<EdgeBits> boundary(static_cast<size_t>(full) + 1);
  for (std::uint32_t s = 0; s <= full; ++s) {
    for (int p = 0; p < g.edge_count(); ++p) {
      const Edge& e = g.at(p);
      if ((s >> e.tail & 1) && !(s >> e.head & 1)) boundary[s].set(static_cast<size_t>(p));
    }
  }
  // blocked bit a*n+b: some side s' with delta+(s') strictly inside
  // delta+(s) puts exactly one of a, b inside.
  std::vector<std::uint64_t> pair_sep(static_cast<size_t>(full) + 1, 0);
  for (std::uint32_t s = 0; s <= full; ++s) {
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (((s >> a) & 1) != ((s >> b) & 1)) pair_sep[s] |= std::uint64_t{1} << (a * n + b);
      }
    }
  }
  for (std::uint32_t s = 1; s < full; ++s) {
    std::uint64_t blocked = 0;
    for (std::uint32_t t = 1; t < full; ++t) {
      if (t == s) continue;
      const EdgeBits& bt = boundary[t];
      const EdgeBits& bs = boundary[s];
      if ((bt & ~bs).none() && bt != bs) blocked |= pair_sep[t];
    }
    for (int a = 0; a < n; ++a) {
      if (!(s >> a & 1)) continue;
      for (int b = 0; b < n; ++b) {
        if (s >> b & 1) continue;
        if (blocked >> (a * n + b) & 1) continue;
        if (!check(s, a, b, boundary[s])) return false;
      }
    }
  }
  return true;
}

}  // namespace

bool verify_ft_by_cuts(const DiGraph& g, std::span<const EdgeId> kept, int k, CutScanLimits limits) {
  if (k < 0) throw InputError("k must be non-negative");
  const EdgeMask hmask = kept_mask(g, kept);
  EdgeBits hbits;
  for (int p = 0; p < g.edge_count(); ++p) {
    if (hmask[p]) hbits.set(static_cast<size_t>(p));
  }
  return scan_minimal_symmetric_cuts(g, limits, [&](std::uint32_t, int, int, const EdgeBits& b) {
    int in_g = static_cast<int>(b.count());
    int in_h = static_cast<int>((b & hbits).count());
    return std::min(in_h, k + 1) == std::min(in_g, k + 1);
  });
}

bool verify_kconn_by_cuts(const DiGraph& g, std::span<const EdgeId> kept, int k, CutScanLimits limits) {
  if (k < 0) throw InputError("k must be non-negative");
  const EdgeMask hmask = kept_mask(g, kept);
  EdgeBits hbits;
  for (int p = 0; p < g.edge_count(); ++p) {
    if (hmask[p]) hbits.set(static_cast<size_t>(p));
  }
  auto lam = kconn_matrix(g, k);
  return scan_minimal_symmetric_cuts(g, limits, [&](std::uint32_t, int a, int b, const EdgeBits& bits) {
    return static_cast<int>((bits & hbits).count()) >= lam[a][b];
  });
}

namespace {

bool strongly_connected_pair(const DiGraph& g, const EdgeMask& alive, VertexId s, VertexId y) {
  auto labels = scc_labels(g, alive);
  return labels[s] == labels[y];
}

void check_vertex(const DiGraph& g, VertexId v) {
  if (v < 0 || v >= g.vertex_count()) throw InputError("vertex out of range: " + std::to_string(v));
}

}  // namespace

bool verify_bounded_degree_witness(const DiGraph& g, std::span<const EdgeId> kept, EdgeId cross_edge,
                                   std::span<const EdgeId> faults, VertexId s, VertexId y, int degree_bound) {
  check_vertex(g, s);
  check_vertex(g, y);
  const EdgeMask hmask = kept_mask(g, kept);
  const int pc = g.position_of(cross_edge);
  std::vector<int> touched(static_cast<size_t>(g.vertex_count()), 0);
  EdgeMask alive(static_cast<size_t>(g.edge_count()), 1);
  for (EdgeId id : faults) {
    if (id == cross_edge) throw InputError("fault set contains the cross edge");
    int p = g.position_of(id);
    if (!alive[p]) continue;
    alive[p] = 0;
    const Edge& e = g.at(p);
    ++touched[e.tail];
    if (e.head != e.tail) ++touched[e.head];
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (touched[v] > degree_bound) {
      throw InputError("fault set touches vertex " + std::to_string(v) + " " + std::to_string(touched[v]) +
                       " times, bound is " + std::to_string(degree_bound));
    }
  }
  if (!strongly_connected_pair(g, alive, s, y)) return false;
  alive[pc] = 0;
  if (strongly_connected_pair(g, alive, s, y)) return false;
  return hmask[pc] != 0;
}

bool verify_color_witness(const DiGraph& g, std::span<const EdgeId> kept, EdgeId cross_edge, int failed_color,
                          VertexId s, VertexId y) {
  check_vertex(g, s);
  check_vertex(g, y);
  const EdgeMask hmask = kept_mask(g, kept);
  const int pc = g.position_of(cross_edge);
  EdgeMask alive(static_cast<size_t>(g.edge_count()), 1);
  bool seen = false;
  for (int p = 0; p < g.edge_count(); ++p) {
    if (g.at(p).color == failed_color) {
      alive[p] = 0;
      seen = true;
    }
  }
  if (!seen) throw InputError("no edge carries color " + std::to_string(failed_color));
  if (!alive[pc]) return false;
  if (!strongly_connected_pair(g, alive, s, y)) return false;
  alive[pc] = 0;
  if (strongly_connected_pair(g, alive, s, y)) return false;
  return hmask[pc] != 0;
}

}  // namespace sccp
