#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dpdp/cost.hpp"
#include "dpdp/sequence.hpp"
#include "dpdp/types.hpp"

namespace dpdp {

// GAP edit distance: align A[1..n] and B[1..m] where a substring deletion of
// A[l+1..r] costs w1(l, r) and of B[l+1..r] costs w2(l, r):
//   P[i,j] = min_{i'<i} D[i',j] + w1(i',i)        (a GLWS down each column)
//   Q[i,j] = min_{j'<j} D[i,j'] + w2(j',j)        (a GLWS along each row)
//   D[i,j] = min(P[i,j], Q[i,j], D[i-1,j-1] when A[i]=B[j]),  D[0,0] = 0.
struct GapInstance {
  std::vector<std::uint8_t> a, b;
  CostModel w1, w2;   // sized n and m respectively
  MatchList matches;  // pairs (i, j) with a[i-1] == b[j-1], 1-based

  Index n() const { return static_cast<Index>(a.size()); }
  Index m() const { return static_cast<Index>(b.size()); }
};

// Builds the match list and softly validates the declared shapes of w1/w2 by
// a sampled Monge check (throws std::invalid_argument on a counterexample).
GapInstance make_gap_instance(std::vector<std::uint8_t> a, std::vector<std::uint8_t> b,
                              CostModel w1, CostModel w2);

// Per-row first non-finalized column; non-increasing in the row index, so the
// finalized region is closed under the componentwise order.
struct Staircase {
  std::vector<Index> frontier;

  bool monotone() const {
    for (std::size_t i = 1; i < frontier.size(); ++i) {
      if (frontier[i] > frontier[i - 1]) return false;
    }
    return true;
  }
};

struct GapResult {
  Index n = 0, m = 0;
  std::vector<Cost> d;        // (n+1) x (m+1), row-major
  std::vector<Index> best_p;  // column-GLWS best decision per cell, -1 on row 0
  std::vector<Index> best_q;  // row-GLWS best decision per cell, -1 on column 0
  RoundStats stats;

  Cost at(Index i, Index j) const { return d[static_cast<std::size_t>(i * (m + 1) + j)]; }
  Cost answer() const { return at(n, m); }
};

// Parallel cordon solver with a staircase frontier and synchronized per-row
// prefix doubling. If m > n the inputs are swapped internally (with w1/w2)
// and the result transposed back.
GapResult gap_solve(const GapInstance& inst);

// Longest path counting effective edges (column best, row best, matching
// diagonals) in the optimized GAP DAG:
//   ed(i,j) = max(ed(i-1,j), ed(i,j-1), ed(bestP)+1, ed(bestQ)+1,
//                 ed(i-1,j-1)+1 when A[i]=B[j]).
// This is the oracle for the solver's round count.
Index gap_effective_depth(const GapInstance& inst, const GapResult& result);

}  // namespace dpdp
