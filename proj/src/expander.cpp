#include "sccpres/expander.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <random>
#include <string>

#include "sccpres/errors.hpp"
#include "sccpres/faults.hpp"

namespace sccp {

namespace {

VertexSet checked_terminals(const DiGraph& g, std::span<const VertexId> terminals) {
  VertexSet u(terminals.begin(), terminals.end());
  for (VertexId v : u) {
    if (v < 0 || v >= g.vertex_count()) throw InputError("terminal out of range: " + std::to_string(v));
  }
  return normalized(std::move(u));
}

std::uint64_t binom(int n, int r) {
  if (r < 0 || r > n) return 0;
  unsigned __int128 acc = 1;
  for (int i = 1; i <= r; ++i) {
    acc = acc * static_cast<unsigned>(n - r + i) / static_cast<unsigned>(i);
    if (acc > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(acc);
}

// dplus[S] = |delta+(S)| for every side bitmask S.
std::vector<int> out_boundary_table(const DiGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> cnt(static_cast<size_t>(n) * n, 0);
  for (const auto& e : g.edges()) {
    if (e.tail != e.head) ++cnt[static_cast<size_t>(e.tail) * n + e.head];
  }
  const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
  std::vector<int> dplus(static_cast<size_t>(full) + 1, 0);
  for (std::uint32_t s = 1; s <= full && s != 0; ++s) {
    int v = std::countr_zero(s);
    std::uint32_t rest = s & (s - 1);
    int d = dplus[rest];
    for (int w = 0; w < n; ++w) {
      if (w == v) continue;
      if (!(s >> w & 1)) d += cnt[static_cast<size_t>(v) * n + w];
      else d -= cnt[static_cast<size_t>(w) * n + v];
    }
    dplus[s] = d;
    if (s == full) break;
  }
  return dplus;
}

Cut cut_from_mask(const DiGraph& g, std::uint32_t mask, Direction dir) {
  Cut c;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (mask >> v & 1) c.side.push_back(v);
  }
  c.direction = dir;
  c.boundary = dir == Direction::out ? out_boundary(g, c.side) : in_boundary(g, c.side);
  return c;
}

bool ratio_at_most(long boundary, long terminal_min, Rational phi) {
  return boundary * phi.den <= phi.num * terminal_min;
}

void check_rational(Rational phi) {
  if (phi.num <= 0 || phi.den <= 0 || phi.num > phi.den) {
    throw InputError("phi must be a rational in (0, 1], got " + std::to_string(phi.num) + "/" +
                     std::to_string(phi.den));
  }
}

}  // namespace

UnbreakableResult is_unbreakable(const DiGraph& g, std::span<const VertexId> terminals, int q, int k,
                                 UnbreakableLimits limits) {
  if (q < 0 || k < 0) throw InputError("q and k must be non-negative");
  VertexSet u = checked_terminals(g, terminals);
  const int size = static_cast<int>(u.size());
  UnbreakableResult out;
  if (size <= 2 * q + 1) return out;

  const int r = q + 1;
  std::uint64_t a_count = binom(size, r);
  std::uint64_t b_count = binom(size - r, r);
  if (b_count != 0 && a_count > limits.max_pairs / b_count) {
    throw CapabilityError("unbreakability check needs " + std::to_string(a_count) + " x " +
                          std::to_string(b_count) + " subset pairs, over limit " +
                          std::to_string(limits.max_pairs));
  }

  VertexSet a(static_cast<size_t>(r)), b(static_cast<size_t>(r)), rest;
  std::vector<char> in_a(static_cast<size_t>(size));
  for_each_combination(size, r, [&](std::span<const int> ai) {
    std::fill(in_a.begin(), in_a.end(), 0);
    for (int i = 0; i < r; ++i) {
      a[i] = u[ai[i]];
      in_a[ai[i]] = 1;
    }
    rest.clear();
    for (int i = 0; i < size; ++i) {
      if (!in_a[i]) rest.push_back(u[i]);
    }
    for_each_combination(static_cast<int>(rest.size()), r, [&](std::span<const int> bi) {
      for (int i = 0; i < r; ++i) b[i] = rest[bi[i]];
      if (flow_value(g, a, b, k + 1) <= k) {
        out.unbreakable = false;
        out.witness = farthest_min_cut(g, a, b);
        return false;
      }
      return true;
    });
    return out.unbreakable;
  });
  return out;
}

UnbreakableResult is_unbreakable_exhaustive(const DiGraph& g, std::span<const VertexId> terminals, int q,
                                            int k, UnbreakableLimits limits) {
  if (q < 0 || k < 0) throw InputError("q and k must be non-negative");
  const int n = g.vertex_count();
  if (n > limits.max_exhaustive_vertices || n > 30) {
    throw CapabilityError("exhaustive cut scan limited to n <= " +
                          std::to_string(std::min(limits.max_exhaustive_vertices, 30)));
  }
  VertexSet u = checked_terminals(g, terminals);
  UnbreakableResult out;
  if (n < 2) return out;
  std::uint32_t umask = 0;
  for (VertexId v : u) umask |= 1u << v;
  const int size = static_cast<int>(u.size());
  auto dplus = out_boundary_table(g);
  const std::uint32_t full = (1u << n) - 1;
  for (std::uint32_t s = 1; s < full; ++s) {
    int inside = std::popcount(s & umask);
    if (inside <= q || size - inside <= q) continue;
    if (dplus[s] <= k) {
      out.unbreakable = false;
      out.witness = cut_from_mask(g, s, Direction::out);
      return out;
    }
    if (dplus[full ^ s] <= k) {
      out.unbreakable = false;
      out.witness = cut_from_mask(g, s, Direction::in);
      return out;
    }
  }
  return out;
}

bool giant_component_check(const DiGraph& g, std::span<const VertexId> terminals, int q, int k,
                           std::uint64_t max_fault_sets) {
  VertexSet u = checked_terminals(g, terminals);
  const int need = static_cast<int>(u.size()) - 2 * q;
  if (need <= 0) return true;
  const int m = g.edge_count();
  check_fault_budget(m, k, max_fault_sets, "giant component check");
  std::vector<int> pos_by_rank;
  for (EdgeId id : g.edge_ids()) pos_by_rank.push_back(g.position_of(id));
  bool ok = true;
  EdgeMask alive(static_cast<size_t>(m), 1);
  std::vector<int> count;
  for_each_fault_set(m, k, [&](std::uint64_t, std::span<const int> f) {
    for (int i : f) alive[pos_by_rank[i]] = 0;
    auto labels = scc_labels(g, alive);
    count.assign(static_cast<size_t>(g.vertex_count()), 0);
    int best = 0;
    for (VertexId v : u) best = std::max(best, ++count[labels[v]]);
    for (int i : f) alive[pos_by_rank[i]] = 1;
    if (best < need) ok = false;
    return ok;
  });
  return ok;
}

std::optional<SparseCut> sparsest_cut_wrt(const DiGraph& g, std::span<const VertexId> terminals, Rational phi,
                                          int exact_limit) {
  check_rational(phi);
  const int n = g.vertex_count();
  if (n > exact_limit || n > 30) {
    throw CapabilityError("exact sparse-cut search limited to n <= " + std::to_string(std::min(exact_limit, 30)) +
                          " (got " + std::to_string(n) + ")");
  }
  VertexSet u = checked_terminals(g, terminals);
  if (u.size() < 2) throw InputError("sparse-cut search needs at least 2 terminals");
  std::uint32_t umask = 0;
  for (VertexId v : u) umask |= 1u << v;
  const int size = static_cast<int>(u.size());
  auto dplus = out_boundary_table(g);
  const std::uint32_t full = (1u << n) - 1;
  for (std::uint32_t s = 1; s < full; ++s) {
    int inside = std::popcount(s & umask);
    int tmin = std::min(inside, size - inside);
    if (tmin == 0) continue;
    if (ratio_at_most(dplus[s], tmin, phi)) {
      return SparseCut{cut_from_mask(g, s, Direction::out), dplus[s], tmin};
    }
  }
  return std::nullopt;
}

std::optional<SparseCut> heuristic_sparse_cut(const DiGraph& g, std::span<const VertexId> terminals,
                                              Rational phi, std::uint64_t seed) {
  check_rational(phi);
  const int n = g.vertex_count();
  VertexSet u = checked_terminals(g, terminals);
  if (u.size() < 2) throw InputError("sparse-cut search needs at least 2 terminals");
  std::vector<char> is_terminal = membership(n, u);
  const int size = static_cast<int>(u.size());

  auto evaluate = [&](const std::vector<char>& side, int& boundary, int& tmin) {
    boundary = 0;
    for (const auto& e : g.edges()) {
      if (side[e.tail] && !side[e.head]) ++boundary;
    }
    int inside = 0;
    for (VertexId v : u) inside += side[v];
    tmin = std::min(inside, size - inside);
  };
  // a/b < c/d with empty-terminal sides treated as infinitely bad.
  auto better = [](int b1, int t1, int b2, int t2) {
    if (t1 == 0) return false;
    if (t2 == 0) return true;
    return static_cast<long>(b1) * t2 < static_cast<long>(b2) * t1;
  };

  std::vector<std::vector<char>> seeds;
  int pairs = 0;
  for (size_t i = 0; i < u.size() && pairs < 64; ++i) {
    for (size_t j = 0; j < u.size() && pairs < 64; ++j) {
      if (i == j) continue;
      VertexId xs[] = {u[i]};
      VertexId ys[] = {u[j]};
      seeds.push_back(membership(n, farthest_min_cut(g, xs, ys).side));
      ++pairs;
    }
  }
  std::mt19937_64 rng(seed);
  for (int r = 0; r < 16; ++r) {
    std::vector<char> side(static_cast<size_t>(n));
    for (auto& c : side) c = static_cast<char>(rng() & 1);
    seeds.push_back(std::move(side));
  }

  for (auto& side : seeds) {
    int b, t;
    evaluate(side, b, t);
    for (bool improved = true; improved;) {
      improved = false;
      for (int v = 0; v < n; ++v) {
        side[v] ^= 1;
        int b2, t2;
        evaluate(side, b2, t2);
        if (better(b2, t2, b, t)) {
          b = b2;
          t = t2;
          improved = true;
        } else {
          side[v] ^= 1;
        }
      }
    }
    if (t > 0 && ratio_at_most(b, t, phi)) {
      Cut c;
      c.side = members(side);
      c.direction = Direction::out;
      c.boundary = out_boundary(g, c.side);
      return SparseCut{std::move(c), b, t};
    }
  }
  return std::nullopt;
}

int ExpanderHierarchy::level_of(VertexId v) const {
  for (size_t i = 0; i < levels.size(); ++i) {
    if (std::binary_search(levels[i].begin(), levels[i].end(), v)) return static_cast<int>(i);
  }
  return -1;
}

namespace {

int largest_scc_outside(const DiGraph& h, const std::vector<char>& in_u) {
  VertexSet rest;
  for (int v = 0; v < h.vertex_count(); ++v) {
    if (!in_u[v]) rest.push_back(v);
  }
  if (rest.empty()) return 0;
  auto sub = induced(h, rest);
  int best = 0;
  for (const auto& c : scc(sub.graph).components) best = std::max(best, static_cast<int>(c.size()));
  return best;
}

}  // namespace

ExpanderHierarchy build_hierarchy(const DiGraph& g, const HierarchyParams& params) {
  check_rational(params.phi);
  if (params.k < 1 || params.q < 1) throw InputError("hierarchy needs q >= 1 and k >= 1");
  if (static_cast<long>(params.q) * params.phi.num < static_cast<long>(params.k) * params.phi.den) {
    throw InputError("hierarchy needs q >= k/phi");
  }

  struct Pending {
    VertexSet component;
    int depth;
  };
  struct Done {
    VertexSet component;
    VertexSet terminals;
    int depth;
    bool exact;
  };
  std::deque<Pending> work;
  for (auto& c : scc(g).components) work.push_back({c, 0});
  std::vector<Done> done;
  ExpanderHierarchy out;

  while (!work.empty()) {
    Pending cur = std::move(work.front());
    work.pop_front();
    auto sub = induced(g, cur.component);
    const DiGraph& h = sub.graph;
    const int nc = h.vertex_count();
    std::vector<char> in_u(static_cast<size_t>(nc), 1);
    int u_size = nc;
    bool exact = true;
    HierarchyTraceStep step;
    step.component = cur.component;
    step.terminal_sizes.push_back(u_size);

    while (u_size >= 2) {
      VertexSet u = members(in_u);
      std::optional<SparseCut> found;
      if (nc <= params.exact_cut_limit) {
        found = sparsest_cut_wrt(h, u, params.phi, params.exact_cut_limit);
      } else if (params.allow_heuristic) {
        exact = false;
        found = heuristic_sparse_cut(h, u, params.phi);
      } else {
        throw CapabilityError("component of " + std::to_string(nc) + " vertices exceeds exact sparse-cut limit " +
                              std::to_string(params.exact_cut_limit));
      }
      if (!found) break;
      std::vector<char> side = membership(nc, found->cut.side);
      const bool small = 2 * static_cast<int>(found->cut.side.size()) <= nc;
      std::vector<char> next(static_cast<size_t>(nc), 0);
      for (int v = 0; v < nc; ++v) {
        next[v] = in_u[v] && (small ? !side[v] : side[v]);
      }
      for (EdgeId id : found->cut.boundary) next[h.edge(id).tail] = 1;
      int next_size = static_cast<int>(std::count(next.begin(), next.end(), 1));
      if (next_size >= u_size) {
        throw CapabilityError("hierarchy update did not shrink the terminal set");
      }
      in_u = std::move(next);
      u_size = next_size;
      step.terminal_sizes.push_back(u_size);
      step.max_remainder.push_back(largest_scc_outside(h, in_u));
    }
    if (step.max_remainder.empty()) step.max_remainder.push_back(largest_scc_outside(h, in_u));

    Done d;
    d.component = cur.component;
    d.depth = cur.depth;
    d.exact = exact;
    VertexSet rest;
    for (int v = 0; v < nc; ++v) {
      if (in_u[v]) d.terminals.push_back(sub.to_parent_vertex[v]);
      else rest.push_back(v);
    }
    std::sort(d.terminals.begin(), d.terminals.end());
    if (!rest.empty()) {
      auto inner = induced(h, rest);
      for (const auto& c : scc(inner.graph).components) {
        VertexSet child;
        for (VertexId v : c) child.push_back(sub.to_parent_vertex[inner.to_parent_vertex[v]]);
        std::sort(child.begin(), child.end());
        work.push_back({std::move(child), cur.depth + 1});
      }
    }
    out.exact = out.exact && exact;
    out.trace.push_back(std::move(step));
    done.push_back(std::move(d));
  }

  int depth_max = -1;
  for (const auto& d : done) depth_max = std::max(depth_max, d.depth);
  out.levels.assign(static_cast<size_t>(depth_max + 1), {});
  for (const auto& d : done) {
    const int level = depth_max - d.depth;
    auto& lv = out.levels[level];
    lv.insert(lv.end(), d.terminals.begin(), d.terminals.end());
    LevelCertificate cert;
    cert.level = level;
    cert.component = d.component;
    cert.terminals = d.terminals;
    cert.exact = d.exact;
    if (params.verify_certificates) {
      auto sub = induced(g, d.component);
      VertexSet local;
      for (VertexId v : d.terminals) local.push_back(sub.from_parent_vertex[v]);
      try {
        cert.unbreakable = is_unbreakable(sub.graph, local, params.q, params.k).unbreakable;
      } catch (const CapabilityError&) {
        cert.unbreakable.reset();
      }
    }
    out.certificates.push_back(std::move(cert));
  }
  for (auto& lv : out.levels) std::sort(lv.begin(), lv.end());
  std::sort(out.certificates.begin(), out.certificates.end(), [](const LevelCertificate& a, const LevelCertificate& b) {
    if (a.level != b.level) return a.level < b.level;
    return a.component < b.component;
  });
  return out;
}

}  // namespace sccp
