#include "sccpres/faults.hpp"

#include <string>
#include <vector>

#include "sccpres/errors.hpp"

namespace sccp {

namespace {

constexpr std::uint64_t kSat = UINT64_MAX;

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > kSat - b ? kSat : a + b; }

std::uint64_t binom(int n, int r) {
  if (r < 0 || r > n) return 0;
  if (r > n - r) r = n - r;
  unsigned __int128 acc = 1;
  for (int i = 1; i <= r; ++i) {
    acc = acc * static_cast<unsigned>(n - r + i) / static_cast<unsigned>(i);
    if (acc > kSat) return kSat;
  }
  return static_cast<std::uint64_t>(acc);
}

// Subsets of {0..j-1} of size <= r.
std::uint64_t subtree(int j, int r) {
  std::uint64_t total = 0;
  for (int t = 0; t <= r && t <= j; ++t) total = sat_add(total, binom(j, t));
  return total;
}

struct Walker {
  const FaultVisitor& visit;
  std::uint64_t begin, end;
  std::uint64_t index = 0;
  std::vector<int> suffix;  // descending; reversed on emit
  std::vector<int> scratch;
  bool stopped = false;

  // Emits `suffix`, then for each i < j the subtree rooted at {i} + suffix.
  void gen(int j, int r) {
    if (stopped) return;
    if (index >= end) {
      stopped = true;
      return;
    }
    std::uint64_t size = subtree(j, r);
    if (index + size <= begin && size != kSat) {
      index += size;
      return;
    }
    if (index >= begin) {
      scratch.assign(suffix.rbegin(), suffix.rend());
      if (!visit(index, scratch)) {
        stopped = true;
        return;
      }
    }
    ++index;
    if (r == 0) return;
    for (int i = 0; i < j && !stopped; ++i) {
      suffix.push_back(i);
      gen(i, r - 1);
      suffix.pop_back();
    }
  }
};

}  // namespace

std::uint64_t count_fault_sets(int m, int k) { return subtree(m, k < 0 ? -1 : k); }

void check_fault_budget(int m, int k, std::uint64_t limit, const char* what) {
  std::uint64_t count = count_fault_sets(m, k);
  if (count > limit) {
    throw CapabilityError(std::string(what) + ": " + std::to_string(count) + " fault sets (m=" +
                          std::to_string(m) + ", k=" + std::to_string(k) + ") exceed limit " +
                          std::to_string(limit));
  }
}

void for_each_fault_set(int m, int k, const FaultVisitor& visit, std::uint64_t begin, std::uint64_t end) {
  if (k < 0 || begin >= end) return;
  Walker w{visit, begin, end, 0, {}, {}, false};
  w.gen(m, k);
}

}  // namespace sccp
