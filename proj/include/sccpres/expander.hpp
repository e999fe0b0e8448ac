#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sccpres/digraph.hpp"
#include "sccpres/flowcut.hpp"

namespace sccp {

/// Positive rational num/den.
struct Rational {
  long num = 1;
  long den = 2;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Rational&, const Rational&) = default;
};

struct UnbreakableResult {
  bool unbreakable = true;
  /// A cut with |delta+(side)| <= k (direction out) or |delta-(side)| <= k
  /// (direction in) leaving more than q terminals on each side.
  std::optional<Cut> witness;
};

struct UnbreakableLimits {
  std::uint64_t max_pairs = 5'000'000;  // ordered (A, B) subset pairs
  int max_exhaustive_vertices = 22;
};

/// Flow reduction: U is (q,k)-unbreakable iff flow(A,B) > k for every
/// ordered pair of disjoint (q+1)-subsets A, B of U.  The witness is the
/// farthest min cut of the first failing pair in lexicographic order.
UnbreakableResult is_unbreakable(const DiGraph& g, std::span<const VertexId> terminals, int q, int k,
                                 UnbreakableLimits limits = {});

/// Same predicate by scanning all 2^n sides; the first violating side in
/// ascending bitmask order is the witness.
UnbreakableResult is_unbreakable_exhaustive(const DiGraph& g, std::span<const VertexId> terminals, int q,
                                            int k, UnbreakableLimits limits = {});

/// True iff every fault set of at most k edges leaves some SCC holding at
/// least |U| - 2q terminals.
bool giant_component_check(const DiGraph& g, std::span<const VertexId> terminals, int q, int k,
                           std::uint64_t max_fault_sets = 2'000'000);

/// phi_U(S) = |delta+(S)| / min(|S ∩ U|, |U - S|) for a side separating U.
struct SparseCut {
  Cut cut;
  int boundary = 0;
  int terminal_min = 0;
};

/// First side in ascending bitmask order with phi_U(S) <= phi, or nullopt
/// when U is phi-expanding.  Throws CapabilityError when n > exact_limit.
std::optional<SparseCut> sparsest_cut_wrt(const DiGraph& g, std::span<const VertexId> terminals, Rational phi,
                                          int exact_limit = 18);

/// Local-search fallback for large n.  A nullopt answer is not a proof of
/// expansion.
std::optional<SparseCut> heuristic_sparse_cut(const DiGraph& g, std::span<const VertexId> terminals,
                                              Rational phi, std::uint64_t seed = 1);

struct HierarchyParams {
  int q = 2;
  int k = 1;
  Rational phi{1, 2};
  int exact_cut_limit = 18;
  bool allow_heuristic = false;     // beyond exact_cut_limit; certificates then unverified
  bool verify_certificates = true;  // run is_unbreakable on every certificate
};

struct LevelCertificate {
  int level = 0;        // 0-based index into ExpanderHierarchy::levels
  VertexSet component;  // an SCC C of G[V_<=level]
  VertexSet terminals;  // V_level ∩ C
  bool exact = true;    // sparse-cut search was exhaustive
  std::optional<bool> unbreakable;  // oracle verdict when it ran
};

/// Per-component record of the top-down update loop.
struct HierarchyTraceStep {
  VertexSet component;
  std::vector<int> terminal_sizes;   // |U| before the first and after every update
  std::vector<int> max_remainder;    // largest SCC of G[C - U] after every update
};

struct ExpanderHierarchy {
  /// levels[0] is the deepest level V_1; levels.back() holds the top-level
  /// terminals of the input's SCCs.
  std::vector<VertexSet> levels;
  std::vector<LevelCertificate> certificates;
  std::vector<HierarchyTraceStep> trace;
  bool exact = true;

  int level_of(VertexId v) const;
};

/// Throws InputError when q < k/phi or phi is outside (0, 1].
ExpanderHierarchy build_hierarchy(const DiGraph& g, const HierarchyParams& params);

/// Calls fn(r-subset) for every r-subset of {0..n-1} in lexicographic order;
/// stops when fn returns false.
template <class Fn>
void for_each_combination(int n, int r, Fn&& fn) {
  if (r < 0 || r > n) return;
  std::vector<int> idx(static_cast<size_t>(r));
  for (int i = 0; i < r; ++i) idx[i] = i;
  for (;;) {
    if (!fn(std::span<const int>(idx))) return;
    int i = r - 1;
    while (i >= 0 && idx[i] == n - r + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace sccp
