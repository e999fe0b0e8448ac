#pragma once

#include <cstdint>
#include <functional>
#include <span>

namespace sccp {

/// Number of subsets of an m-element universe with at most k elements,
/// saturating at UINT64_MAX.
std::uint64_t count_fault_sets(int m, int k);

/// Throws CapabilityError when count_fault_sets(m, k) exceeds `limit`.
void check_fault_budget(int m, int k, std::uint64_t limit, const char* what);

/// Visitor receives (global index, element indices in ascending order) and
/// returns false to stop early.
using FaultVisitor = std::function<bool(std::uint64_t, std::span<const int>)>;

/// Visits every subset of {0..m-1} of size <= k in colexicographic order
/// (the empty set first, then {0}, {1}, {0,1}, {2}, {0,2}, {1,2}, ...),
/// restricted to global indices in [begin, end).  Whole subtrees before
/// `begin` are skipped by counting, so shards start in O(k * m) time.
void for_each_fault_set(int m, int k, const FaultVisitor& visit, std::uint64_t begin = 0,
                        std::uint64_t end = UINT64_MAX);

}  // namespace sccp
