#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace dpdp {

// State (subproblem) identifier. State 0 is the boundary; DP arrays are
// 1-indexed logically with slot 0 reserved for the boundary value.
using Index = std::int64_t;

#ifdef DPDP_COST_DOUBLE
using Cost = double;
inline constexpr Cost kInf = std::numeric_limits<double>::infinity();
#else
// Signed 64-bit costs keep oracle-equivalence tests exact: comparisons and
// tie-breaks are deterministic, so round counts are too.
using Cost = std::int64_t;
inline constexpr Cost kInf = std::numeric_limits<std::int64_t>::max() / 4;
#endif

constexpr bool is_inf(Cost x) { return x >= kInf; }

// Addition where kInf absorbs, so infinite DP values never overflow.
constexpr Cost add_cost(Cost a, Cost b) {
  return (is_inf(a) || is_inf(b)) ? kInf : a + b;
}

// Per-round instrumentation of a phase-parallel run.
struct RoundStats {
  Index rounds = 0;
  std::vector<Index> frontier_sizes;       // states finalized per round
  Index wasted_states = 0;                 // probed by prefix doubling but not finalized
  std::vector<double> elapsed_per_round;   // wall time, milliseconds

  Index total_finalized() const {
    Index s = 0;
    for (Index f : frontier_sizes) s += f;
    return s;
  }
};

struct DepthReport {
  Index perfect_depth = 0;    // longest chain of best-decision edges
  Index effective_depth = 0;  // longest path counting effective edges
};

// Longest chain i -> best[i] -> best[best[i]] -> ... -> 0, in edges.
// `best` has size n+1 with slot 0 unused; requires best[i] < i.
Index perfect_depth(std::span<const Index> best);

// Effective depth of the optimized GLWS DAG, where normal edges connect
// every j < i and effective edges run from best[i] to i:
//   ed(0) = 0,  ed(i) = max(ed(i-1), ed(best[i]) + 1).
Index effective_depth_glws(std::span<const Index> best);

DepthReport depth_report(std::span<const Index> best);

}  // namespace dpdp
