#include "sccpres/kconn.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "sccpres/errors.hpp"

namespace sccp {

std::vector<std::vector<int>> kconn_matrix(const DiGraph& g, int k, const EdgeMask& alive) {
  if (k < 0) throw InputError("k must be non-negative");
  const int n = g.vertex_count();
  std::vector<std::vector<int>> lam(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) lam[u][v] = lam[v][u] = symmetric_connectivity(g, u, v, k, alive);
  }
  return lam;
}

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(static_cast<size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

DemandPairs spanning_tree(const std::vector<std::vector<int>>& lam) {
  const int n = static_cast<int>(lam.size());
  std::vector<DemandPair> all;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) all.push_back({u, v, lam[u][v]});
  }
  std::stable_sort(all.begin(), all.end(), [](const DemandPair& a, const DemandPair& b) { return a.lambda > b.lambda; });
  Dsu dsu(n);
  DemandPairs out;
  for (const auto& p : all) {
    if (dsu.unite(p.u, p.v)) out.pairs.push_back(p);
  }
  return out;
}

}  // namespace

DemandPairs demand_pairs(const DiGraph& g, int k, const EdgeMask& alive) {
  return spanning_tree(kconn_matrix(g, k, alive));
}

int tree_path_min(const DemandPairs& dp, int n, VertexId u, VertexId v, int k) {
  if (u == v) return k;
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<size_t>(n));
  for (const auto& p : dp.pairs) {
    adj[p.u].push_back({p.v, p.lambda});
    adj[p.v].push_back({p.u, p.lambda});
  }
  std::vector<int> best(static_cast<size_t>(n), -1);
  std::vector<int> stack{u};
  best[u] = k;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (auto [y, w] : adj[x]) {
      if (best[y] != -1) continue;
      best[y] = std::min(best[x], w);
      stack.push_back(y);
    }
  }
  return std::max(best[v], 0);
}

PreserverResult greedy_kconn_preserver(const DiGraph& g, int k, bool use_demand_pairs) {
  if (k < 0) throw InputError("k must be non-negative");
  const int n = g.vertex_count();
  const int m = g.edge_count();
  std::vector<int> order(static_cast<size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) { return g.at(x).id < g.at(y).id; });

  EdgeMask alive(static_cast<size_t>(m), 1);
  const auto target = kconn_matrix(g, k);
  DemandPairs dp;
  if (use_demand_pairs) dp = spanning_tree(target);

  PreserverResult out;
  out.k = k;
  out.provenance = use_demand_pairs ? "greedy_kconn(demand pairs)" : "greedy_kconn(all pairs)";
  out.stats.input_edges = m;
  for (bool changed = true; changed;) {
    changed = false;
    ++out.stats.passes;
    for (int pe : order) {
      if (!alive[pe]) continue;
      ++out.stats.removal_attempts;
      alive[pe] = 0;
      bool ok = true;
      if (use_demand_pairs) {
        for (const auto& p : dp.pairs) {
          ++out.stats.oracle_calls;
          if (symmetric_connectivity(g, p.u, p.v, k, alive) != p.lambda) {
            ok = false;
            break;
          }
        }
      } else {
        for (int u = 0; u < n && ok; ++u) {
          for (int v = u + 1; v < n; ++v) {
            ++out.stats.oracle_calls;
            if (symmetric_connectivity(g, u, v, k, alive) != target[u][v]) {
              ok = false;
              break;
            }
          }
        }
      }
      if (!ok) {
        alive[pe] = 1;
        continue;
      }
      changed = true;
      if (use_demand_pairs) dp = demand_pairs(g, k, alive);
    }
  }
  for (int p = 0; p < m; ++p) {
    if (alive[p]) out.kept_edges.push_back(g.at(p).id);
  }
  std::sort(out.kept_edges.begin(), out.kept_edges.end());
  out.stats.output_edges = static_cast<int>(out.kept_edges.size());
  return out;
}

int default_decomposition_q(int n, int k) {
  int q = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n) * k)));
  while (static_cast<long>(q) * q < static_cast<long>(n) * k) ++q;
  while (q > 1 && static_cast<long>(q - 1) * (q - 1) >= static_cast<long>(n) * k) --q;
  return std::max(q, 1);
}

Decomposition unbreakability_decomposition(const DiGraph& g, int q, int k, UnbreakableLimits limits) {
  if (q < 1) throw InputError("decomposition needs q >= 1");
  if (k < 0) throw InputError("k must be non-negative");
  Decomposition out;
  out.q = q;
  out.k = k;
  if (g.vertex_count() > 0) {
    VertexSet all(static_cast<size_t>(g.vertex_count()));
    std::iota(all.begin(), all.end(), 0);
    out.parts.push_back(std::move(all));
  }
  for (size_t i = 0; i < out.parts.size();) {
    const VertexSet& part = out.parts[i];
    if (static_cast<int>(part.size()) < 2 * q) {
      ++i;
      continue;
    }
    auto res = is_unbreakable(g, part, q - 1, k, limits);
    if (res.unbreakable) {
      ++i;
      continue;
    }
    auto in_l = membership(g.vertex_count(), res.witness->side);
    VertexSet left, right;
    for (VertexId v : part) (in_l[v] ? left : right).push_back(v);
    out.cuts.push_back(*res.witness);
    out.parts[i] = std::move(left);
    out.parts.push_back(std::move(right));
  }
  std::sort(out.parts.begin(), out.parts.end());
  return out;
}

CutBoundReport check_kcritical_cut_bound(const DiGraph& h, int k, std::int64_t sample_limit, std::uint64_t seed) {
  if (k < 0) throw InputError("k must be non-negative");
  const int n = h.vertex_count();
  CutBoundReport out;
  int positive = 0;
  for (const auto& p : demand_pairs(h, k).pairs) positive += p.lambda > 0;
  out.bound = 4 * k * positive;
  if (n < 2) return out;

  auto check_side = [&](const std::vector<char>& in) {
    int plus = 0, minus = 0;
    for (const auto& e : h.edges()) {
      if (in[e.tail] && !in[e.head]) ++plus;
      if (!in[e.tail] && in[e.head]) ++minus;
    }
    if (plus > k) return;
    ++out.cuts_checked;
    if (minus > out.bound) {
      ++out.violations;
      if (out.violating_sides.size() < 16) out.violating_sides.push_back(members(in));
    }
  };

  std::vector<char> in(static_cast<size_t>(n));
  const bool exhaustive = n < 62 && ((std::int64_t{1} << n) - 2) <= sample_limit;
  out.exhaustive = exhaustive;
  if (exhaustive) {
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t s = 1; s < full; ++s) {
      for (int v = 0; v < n; ++v) in[v] = static_cast<char>(s >> v & 1);
      check_side(in);
    }
  } else {
    std::mt19937_64 rng(seed);
    for (std::int64_t i = 0; i < sample_limit; ++i) {
      for (int v = 0; v < n; ++v) in[v] = static_cast<char>(rng() & 1);
      check_side(in);
    }
  }
  return out;
}

}  // namespace sccp
