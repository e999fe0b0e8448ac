#pragma once

// Brute-force reference implementations.  Everything here is deliberately
// naive (closures, subset scans) and shares no code with the library beyond
// the DiGraph container itself.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "sccpres/digraph.hpp"
#include "sccpres/preservers.hpp"

namespace oracle {

using sccp::DiGraph;
using sccp::EdgeId;
using sccp::EdgeSet;
using sccp::VertexId;

using Matrix = std::vector<std::vector<char>>;

// Reflexive-transitive closure over edges whose id passes `alive`.
inline Matrix closure(const DiGraph& g, const std::function<bool(EdgeId)>& alive) {
  const int n = g.vertex_count();
  Matrix r(n, std::vector<char>(n, 0));
  for (int v = 0; v < n; ++v) r[v][v] = 1;
  for (const auto& e : g.edges()) {
    if (alive(e.id)) r[e.tail][e.head] = 1;
  }
  for (int w = 0; w < n; ++w)
    for (int u = 0; u < n; ++u)
      if (r[u][w])
        for (int v = 0; v < n; ++v)
          if (r[w][v]) r[u][v] = 1;
  return r;
}

inline bool contains(const EdgeSet& s, EdgeId e) { return std::find(s.begin(), s.end(), e) != s.end(); }

inline Matrix closure_without(const DiGraph& g, const EdgeSet& keep, const EdgeSet& faults) {
  return closure(g, [&](EdgeId e) { return contains(keep, e) && !contains(faults, e); });
}

inline bool sc(const Matrix& r, int a, int b) { return r[a][b] && r[b][a]; }

inline bool all_sc(const Matrix& r) {
  const int n = static_cast<int>(r.size());
  for (int v = 1; v < n; ++v)
    if (!sc(r, 0, v)) return false;
  return true;
}

// Pairs the variant constrains; global is handled separately.
inline std::vector<std::pair<int, int>> relevant_pairs(const sccp::VariantSpec& spec, int n) {
  std::vector<std::pair<int, int>> out;
  switch (spec.variant) {
    case sccp::Variant::all_pairs:
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) out.push_back({a, b});
      break;
    case sccp::Variant::sourcewise:
      for (int s : spec.sources)
        for (int v = 0; v < n; ++v)
          if (v != s) out.push_back({s, v});
      break;
    case sccp::Variant::single_source:
      for (int v = 0; v < n; ++v)
        if (v != spec.s) out.push_back({spec.s, v});
      break;
    case sccp::Variant::st:
      out.push_back({spec.s, spec.t});
      break;
    case sccp::Variant::global:
      break;
  }
  return out;
}

inline bool same_requirements(const sccp::VariantSpec& spec, const Matrix& a, const Matrix& b) {
  if (spec.variant == sccp::Variant::global) return all_sc(a) == all_sc(b);
  for (auto [u, v] : relevant_pairs(spec, static_cast<int>(a.size()))) {
    if (sc(a, u, v) != sc(b, u, v)) return false;
  }
  return true;
}

// Every subset of `universe` with at most k elements.
inline void subsets(const EdgeSet& universe, int k, const std::function<void(const EdgeSet&)>& fn) {
  EdgeSet cur;
  std::function<void(size_t)> rec = [&](size_t from) {
    fn(cur);
    if (static_cast<int>(cur.size()) == k) return;
    for (size_t i = from; i < universe.size(); ++i) {
      cur.push_back(universe[i]);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

inline bool ft_ok(const DiGraph& g, const EdgeSet& kept, const sccp::VariantSpec& spec, int k) {
  const EdgeSet all = g.edge_ids();
  bool ok = true;
  subsets(all, k, [&](const EdgeSet& f) {
    if (!ok) return;
    if (!same_requirements(spec, closure_without(g, all, f), closure_without(g, kept, f))) ok = false;
  });
  return ok;
}

// e is critical in g iff some F of size <= k drawn from E(g) - e separates a
// relevant pair only once e is also removed.
inline bool critical(const DiGraph& g, EdgeId e, const sccp::VariantSpec& spec, int k) {
  EdgeSet others;
  for (EdgeId id : g.edge_ids())
    if (id != e) others.push_back(id);
  const EdgeSet all = g.edge_ids();
  bool found = false;
  subsets(others, k, [&](const EdgeSet& f) {
    if (found) return;
    EdgeSet fe = f;
    fe.push_back(e);
    if (!same_requirements(spec, closure_without(g, all, f), closure_without(g, all, fe))) found = true;
  });
  return found;
}

inline EdgeSet critical_set(const DiGraph& g, const sccp::VariantSpec& spec, int k) {
  EdgeSet out;
  for (EdgeId e : g.edge_ids())
    if (critical(g, e, spec, k)) out.push_back(e);
  return out;
}

// Minimum |delta+(S)| over X ⊆ S, S ∩ Y = ∅, restricted to alive ids; equals
// the max flow by duality.
inline int min_cut(const DiGraph& g, const std::vector<int>& xs, const std::vector<int>& ys,
                   const std::function<bool(EdgeId)>& alive) {
  const int n = g.vertex_count();
  int best = 1 << 30;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    bool ok = true;
    for (int x : xs) ok = ok && ((s >> x) & 1u);
    for (int y : ys) ok = ok && !((s >> y) & 1u);
    if (!ok) continue;
    int c = 0;
    for (const auto& e : g.edges()) {
      if (alive(e.id) && ((s >> e.tail) & 1u) && !((s >> e.head) & 1u)) ++c;
    }
    best = std::min(best, c);
  }
  return best;
}

inline int lambda_k(const DiGraph& g, int u, int v, int k, const std::function<bool(EdgeId)>& alive) {
  return std::min({min_cut(g, {u}, {v}, alive), min_cut(g, {v}, {u}, alive), k});
}

inline bool kconn_ok(const DiGraph& g, const EdgeSet& kept, int k) {
  const int n = g.vertex_count();
  auto all = [](EdgeId) { return true; };
  auto sub = [&](EdgeId e) { return contains(kept, e); };
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (lambda_k(g, u, v, k, all) != lambda_k(g, u, v, k, sub)) return false;
  return true;
}

inline std::uint32_t bits(const std::vector<int>& side) {
  std::uint32_t b = 0;
  for (int v : side) b |= 1u << v;
  return b;
}

inline EdgeSet out_edges_of(const DiGraph& g, std::uint32_t side) {
  EdgeSet out;
  for (const auto& e : g.edges())
    if (((side >> e.tail) & 1u) && !((side >> e.head) & 1u)) out.push_back(e.id);
  return out;
}

inline EdgeSet in_edges_of(const DiGraph& g, std::uint32_t side) {
  EdgeSet out;
  for (const auto& e : g.edges())
    if (!((side >> e.tail) & 1u) && ((side >> e.head) & 1u)) out.push_back(e.id);
  return out;
}

// Def of (q,k)-unbreakability checked over every side.
inline bool unbreakable(const DiGraph& g, const std::vector<int>& u, int q, int k) {
  const int n = g.vertex_count();
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    int in = 0;
    for (int v : u) in += (s >> v) & 1u;
    if (in <= q || static_cast<int>(u.size()) - in <= q) continue;
    if (static_cast<int>(out_edges_of(g, s).size()) <= k || static_cast<int>(in_edges_of(g, s).size()) <= k)
      return false;
  }
  return true;
}

}  // namespace oracle
