#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "dpdp/parallel.hpp"
#include "dpdp/tournament_tree.hpp"
#include "dpdp/types.hpp"

namespace dpdp {

struct LisResult {
  Index k = 0;                  // LIS length = number of rounds
  std::vector<Index> round_of;  // per element: its strict-LIS-ending-here value
};

// Parallel LIS by repeated prefix-min-record extraction: round r removes
// exactly the elements whose strict LIS value is r.
template <class Key>
LisResult lis(std::span<const Key> a) {
  LisResult r;
  r.round_of.assign(a.size(), 0);
  if (a.empty()) return r;
  TournamentTree<Key> tree(a);
  while (tree.live_count() > 0) {
    ++r.k;
    for (Index idx : tree.extract_prefix_min_records()) {
      r.round_of[static_cast<std::size_t>(idx)] = r.k;
    }
  }
  return r;
}

// Match pair: a[i] == b[j], 1-based positions.
struct MatchPair {
  Index i = 0, j = 0;

  friend bool operator==(const MatchPair&, const MatchPair&) = default;
};

// All match pairs sorted by i ascending, j descending within equal i.
struct MatchList {
  std::vector<MatchPair> pairs;

  Index size() const { return static_cast<Index>(pairs.size()); }
};

MatchList build_match_list(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b);

// Generic-value variant used by the LIS-to-LCS mapping tests.
template <class T>
MatchList build_match_list_of(std::span<const T> a, std::span<const T> b) {
  std::unordered_map<T, std::vector<Index>> where;
  for (Index j = static_cast<Index>(b.size()); j >= 1; --j) {
    where[b[static_cast<std::size_t>(j - 1)]].push_back(j);  // descending j
  }
  MatchList m;
  for (Index i = 1; i <= static_cast<Index>(a.size()); ++i) {
    auto it = where.find(a[static_cast<std::size_t>(i - 1)]);
    if (it == where.end()) continue;
    for (Index j : it->second) m.pairs.push_back({i, j});
  }
  return m;
}

struct SparseLcsResult {
  Index k = 0;                                   // LCS length = number of rounds
  std::vector<std::vector<Index>> cordon_trace;  // per round: extracted pair indices
};

// Sparse LCS over the sorted match list: a pair is on the current cordon iff
// its j is <= the running prefix-min of live pairs. Equivalent to the strict
// LIS of the j-sequence.
SparseLcsResult sparse_lcs(const MatchList& m);

}  // namespace dpdp
