#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dpdp/cost.hpp"
#include "dpdp/types.hpp"

namespace dpdp {

struct GlwsSolution;
struct GapInstance;
enum class ObstWeights;

// Deliberately naive reference implementations, single-threaded, sharing no
// code with the optimized modules beyond the cost evaluators. Property tests
// and the CLI's brute-* algorithms run these.
namespace oracle {

// Literal double loop over Eq. D[i] = min_{0<=j<i} E[j] + w(j,i);
// smallest-j tie-break.
GlwsSolution brute_glws(const CostModel& model, Index n, Cost d0);

// Classic O(nm) LCS table.
Index brute_lcs(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b);

struct BruteLis {
  Index k = 0;
  std::vector<Index> dp;  // strict LIS ending at each element
};

template <class Key>
BruteLis brute_lis(std::span<const Key> a) {
  const Index n = static_cast<Index>(a.size());
  BruteLis r;
  r.dp.assign(static_cast<std::size_t>(n), 1);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < i; ++j) {
      if (a[static_cast<std::size_t>(j)] < a[static_cast<std::size_t>(i)]) {
        r.dp[static_cast<std::size_t>(i)] =
            std::max(r.dp[static_cast<std::size_t>(i)], r.dp[static_cast<std::size_t>(j)] + 1);
      }
    }
    r.k = std::max(r.k, r.dp[static_cast<std::size_t>(i)]);
  }
  return r;
}

// O(n log k) patience-style strict LIS length.
template <class Key>
Index patience_lis(std::span<const Key> a) {
  std::vector<Key> tails;
  for (const Key& x : a) {
    auto it = std::lower_bound(tails.begin(), tails.end(), x);
    if (it == tails.end()) {
      tails.push_back(x);
    } else {
      *it = x;
    }
  }
  return static_cast<Index>(tails.size());
}

// Literal triple loop of the GAP recurrence; returns the full D table,
// row-major (n+1) x (m+1).
std::vector<Cost> brute_gap(const GapInstance& inst);

// O(k n^2) evaluation of D[i,k'] = min_{j<i} D[j,k'-1] + w(j,i).
Cost brute_kglws(const CostModel& model, Index n, Index k);

// Unrestricted O(n^3) optimal binary search tree.
Cost brute_obst(std::span<const Cost> weights, ObstWeights kind);

}  // namespace oracle
}  // namespace dpdp
