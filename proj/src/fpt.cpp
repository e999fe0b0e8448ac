#include "sccpres/fpt.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "sccpres/errors.hpp"
#include "sccpres/expander.hpp"
#include "sccpres/impcut.hpp"
#include "sccpres/verify.hpp"

namespace sccp {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t i) {
  // splitmix64 finalizer over seed and index
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (i + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

int sample_count_for(int n) {
  if (n <= 2) return 1;
  return std::max(1, static_cast<int>(std::ceil(50.0 * std::log(static_cast<double>(n)) - 1e-9)));
}

CriticalContainerReport critical_edge_container(const DiGraph& g, std::span<const VertexId> terminals, int q, int k,
                                                std::uint64_t seed, OracleLimits limits) {
  if (q < 1) throw InputError("container needs q >= 1");
  if (k < 0) throw InputError("k must be non-negative");
  const int n = g.vertex_count();
  VertexSet u(terminals.begin(), terminals.end());
  for (VertexId v : u) {
    if (v < 0 || v >= n) throw InputError("terminal out of range: " + std::to_string(v));
  }
  u = normalized(std::move(u));

  CriticalContainerReport rep;
  rep.rng_seed = seed;
  rep.sample_count = sample_count_for(n);
  rep.per_vertex_terminals.assign(static_cast<size_t>(n), {});
  rep.skip_counts.assign(static_cast<size_t>(n), 0);
  if (u.empty() || n == 0) return rep;

  EdgeSet edges;
  const size_t uprime = std::min(u.size(), static_cast<size_t>(5) * q * q);
  rep.u_prime.assign(u.begin(), u.begin() + static_cast<long>(uprime));
  {
    EdgeSet j;
    for (VertexId s : rep.u_prime) {
      auto part = sscp(g, s, k, limits);
      j.insert(j.end(), part.kept_edges.begin(), part.kept_edges.end());
    }
    j = normalized_edges(std::move(j));
    rep.j_union = static_cast<int>(j.size());
    edges = std::move(j);
  }

  std::mt19937_64 rng(seed);
  for (int s = 0; s < rep.sample_count; ++s) {
    VertexSet qj = u;
    if (static_cast<int>(u.size()) > q) {
      for (int i = 0; i < q; ++i) {
        std::uniform_int_distribution<size_t> pick(static_cast<size_t>(i), qj.size() - 1);
        std::swap(qj[i], qj[pick(rng)]);
      }
      qj.resize(static_cast<size_t>(q));
      std::sort(qj.begin(), qj.end());
    }
    rep.sampled_sets.push_back(std::move(qj));
  }

  const std::size_t bound = static_cast<std::size_t>(2) * rep.sample_count * q;
  std::vector<char> in_s(static_cast<size_t>(n));
  for (VertexId v = 0; v < n; ++v) {
    std::fill(in_s.begin(), in_s.end(), 0);
    VertexId xs[] = {v};
    for (const auto& qj : rep.sampled_sets) {
      if (std::binary_search(qj.begin(), qj.end(), v)) {
        ++rep.skip_counts[v];
        continue;
      }
      for (Direction dir : {Direction::out, Direction::in}) {
        auto c = important_cut_container(g, xs, qj, k, dir);
        if (!c.has_cut()) continue;
        for (VertexId w : c.cut.side) in_s[w] = 1;
      }
    }
    VertexSet& ui = rep.per_vertex_terminals[v];
    for (VertexId w : u) {
      if (in_s[w]) ui.push_back(w);
    }
    if (ui.size() > bound) {
      throw std::logic_error("terminal set of vertex " + std::to_string(v) + " has " + std::to_string(ui.size()) +
                             " > 2*lambda*q vertices; U is not (q, 2^k)-unbreakable");
    }
    for (VertexId w : ui) {
      if (w == v) continue;
      VertexId src[] = {w};
      for (Direction dir : {Direction::out, Direction::in}) {
        auto c = important_cut_container(g, src, xs, k + 1, dir);
        if (!c.has_cut()) continue;
        edges.insert(edges.end(), c.cut.boundary.begin(), c.cut.boundary.end());
      }
    }
  }
  rep.edges = normalized_edges(std::move(edges));
  return rep;
}

int fpt_default_q(int n, int k) {
  const double pow2 = std::ldexp(1.0, k);
  const double root = std::sqrt(std::max(1.0, std::log(std::max(1, n))));
  int q = static_cast<int>(std::ceil(pow2 * root - 1e-9));
  return std::max(q, static_cast<int>(std::ldexp(1.0, k + 1)));
}

FptContainer fpt_container_all_pairs(const DiGraph& g, int k, std::uint64_t seed, FptParams params,
                                     OracleLimits limits) {
  if (k < 0) throw InputError("k must be non-negative");
  if (k > 20) throw CapabilityError("fpt container limited to k <= 20");
  const int pow2 = 1 << k;
  FptContainer out;
  out.q = params.q ? *params.q : fpt_default_q(g.vertex_count(), k);
  if (out.q < 2 * pow2) throw InputError("fpt q must be at least 2^(k+1) so that phi <= 1/2");
  HierarchyParams hp;
  hp.k = pow2;
  hp.q = out.q;
  hp.phi = {pow2, out.q};
  hp.exact_cut_limit = params.exact_cut_limit;
  hp.verify_certificates = false;
  auto h = build_hierarchy(g, hp);
  out.levels = static_cast<int>(h.levels.size());
  out.sample_count = sample_count_for(g.vertex_count());
  EdgeSet edges;
  std::uint64_t index = 0;
  for (const auto& cert : h.certificates) {
    const std::uint64_t child = derive_seed(seed, index++);
    if (cert.component.size() < 2) {
      out.per_component_sizes.push_back(0);
      continue;
    }
    auto sub = induced(g, cert.component);
    VertexSet local;
    for (VertexId v : cert.terminals) local.push_back(sub.from_parent_vertex[v]);
    auto rep = critical_edge_container(sub.graph, local, out.q, k, child, limits);
    out.per_component_sizes.push_back(static_cast<int>(rep.edges.size()));
    for (EdgeId id : rep.edges) edges.push_back(sub.to_parent_edge[id]);
  }
  out.edges = normalized_edges(std::move(edges));
  return out;
}

namespace {

PreserverResult fpt_once(const DiGraph& g, int k, std::uint64_t seed, const FptOptions& options,
                         OracleLimits limits) {
  PreserverResult out;
  out.spec = VariantSpec::all_pairs();
  out.k = k;
  out.provenance = "fpt";
  out.seed = seed;
  out.stats.input_edges = g.edge_count();
  EdgeSet kept = g.edge_ids();
  for (std::uint64_t round = 0;; ++round) {
    if (options.stop_threshold && static_cast<int>(kept.size()) <= *options.stop_threshold) break;
    DiGraph h = restrict_to(g, kept);
    auto container = fpt_container_all_pairs(h, k, derive_seed(seed, round), options.params, limits);
    ++out.stats.oracle_calls;
    std::optional<EdgeId> victim;
    for (EdgeId id : kept) {
      if (!std::binary_search(container.edges.begin(), container.edges.end(), id)) {
        victim = id;
        break;
      }
    }
    if (!victim) break;
    ++out.stats.removal_attempts;
    if (options.test_mode && is_ft_critical(h, *victim, VariantSpec::all_pairs(), k, limits).critical) {
      throw std::logic_error("fpt container omitted critical edge " + std::to_string(*victim));
    }
    kept.erase(std::find(kept.begin(), kept.end(), *victim));
    ++out.stats.passes;
  }
  out.kept_edges = std::move(kept);
  out.stats.output_edges = static_cast<int>(out.kept_edges.size());
  return out;
}

}  // namespace

PreserverResult fpt_preserver(const DiGraph& g, int k, std::uint64_t seed, FptOptions options, OracleLimits limits) {
  std::uint64_t current = seed;
  for (int attempt = 0;; ++attempt) {
    auto out = fpt_once(g, k, current, options, limits);
    out.reseeds = attempt;
    if (!options.verify_output) return out;
    bool ok = true;
    try {
      ok = verify_ft(g, out.kept_edges, VariantSpec::all_pairs(), k, {limits.max_fault_sets}).ok;
    } catch (const CapabilityError&) {
      return out;  // too large to verify exhaustively; trust the container
    }
    if (ok || attempt >= options.max_reseeds) return out;
    current = derive_seed(seed, 0x5eed0000ULL + static_cast<std::uint64_t>(attempt));
  }
}

}  // namespace sccp
