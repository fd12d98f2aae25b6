#pragma once

#include <span>
#include <vector>

#include "dpdp/cost.hpp"
#include "dpdp/decisions.hpp"
#include "dpdp/types.hpp"

namespace dpdp {

// Finalized solution of D[i] = min_{0<=j<i} E[j] + w(j,i). Arrays have size
// n+1: dp[0] is the boundary value, best[0] = 0 is a placeholder.
struct GlwsSolution {
  std::vector<Cost> dp;
  std::vector<Index> best;
  RoundStats stats;  // populated by the parallel solver only

  Index n() const { return static_cast<Index>(dp.size()) - 1; }

  // Number of best-decision edges chased from state n down to the boundary,
  // e.g. the number of clusters in the optimal partition.
  Index solution_size() const;
};

// Sequential left-to-right solver; the best-decision triples live in a
// monotonic double-ended queue. O(n log n).
GlwsSolution glws_seq(const CostModel& model, Index n, Cost d0);

// Cordon-based parallel solver, convex and concave. Output is identical to
// glws_seq; stats records rounds, frontier sizes and prefix-doubling waste.
GlwsSolution glws_par(const CostModel& model, Index n, Cost d0);

struct CordonResult {
  Index cordon = 0;                // first state not provably ready this round
  std::vector<Cost> batch_values;  // finalized D for states now+1 .. cordon-1
  std::vector<Index> batch_best;   // their best decisions
  Index examined = 0;              // states touched by prefix doubling
};

// One round of cordon finding by prefix doubling over B. `e` holds finalized
// E values for states <= now; B must cover [now+1, n] with decisions <= now.
CordonResult find_cordon(const CostModel& model, std::span<const Cost> e,
                         const DecisionIntervals& b, Index now);

}  // namespace dpdp
