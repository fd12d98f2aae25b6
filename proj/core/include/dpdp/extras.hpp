#pragma once

#include <span>
#include <vector>

#include "dpdp/cost.hpp"
#include "dpdp/types.hpp"

namespace dpdp {

// D[i,k'] = min_{j<i} D[j,k'-1] + w(j,i) with D[0,0] = 0, D[i,0] = inf for
// i > 0: the least-weight partition of 1..n into exactly k clusters.
struct KGlwsResult {
  Cost cost = kInf;
  Index n = 0, k = 0;
  std::vector<Cost> d;      // (n+1) x (k+1), row-major by state
  std::vector<Index> best;  // same layout; -1 where undefined
  Index rounds = 0;

  Cost at(Index i, Index kk) const { return d[static_cast<std::size_t>(i * (k + 1) + kk)]; }
  Index best_at(Index i, Index kk) const { return best[static_cast<std::size_t>(i * (k + 1) + kk)]; }
};

// Round k' fills column k' from column k'-1 by totally-monotone row minima;
// exactly k rounds. Requires a convex model and 1 <= k <= n (k > n yields
// an infinite cost with an empty table).
KGlwsResult k_glws(const CostModel& model, Index n, Index k);

// Weight conventions for the optimal binary search tree.
enum class ObstWeights {
  Frequencies,  // weights[t] is the access frequency of key t+1; w(i,j) sums keys i..j
  LeafGap,      // 2n+1 alternating gap/key weights a_0..a_2n; w(i,j) sums a_{2(i-1)}..a_{2j}
};

struct ObstResult {
  Cost cost = 0;
  Index n = 0;
  std::vector<Cost> d;      // (n+2) x (n+1), D[i][j] = cost of keys i..j, D[i][i-1] = 0
  std::vector<Index> best;  // chosen root; 0 where undefined

  Cost at(Index i, Index j) const { return d[static_cast<std::size_t>(i * (n + 1) + j)]; }
  Index best_at(Index i, Index j) const { return best[static_cast<std::size_t>(i * (n + 1) + j)]; }
};

// Knuth-restricted OBST: root search limited to [best[i][j-1], best[i+1][j]],
// smallest-root tie-break, O(n^2) work. Sequential mode fills by increasing
// span; parallel mode sweeps each anti-diagonal with a parallel-for. Both
// produce bit-identical tables.
ObstResult obst(std::span<const Cost> weights, ObstWeights kind, bool parallel);

}  // namespace dpdp
