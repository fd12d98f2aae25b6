#include "dpdp/sequence.hpp"

#include <array>

namespace dpdp {

MatchList build_match_list(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
  // bucket b's positions per symbol, descending
  std::array<std::vector<Index>, 256> where;
  for (Index j = static_cast<Index>(b.size()); j >= 1; --j) {
    where[b[static_cast<std::size_t>(j - 1)]].push_back(j);
  }
  MatchList m;
  for (Index i = 1; i <= static_cast<Index>(a.size()); ++i) {
    for (Index j : where[a[static_cast<std::size_t>(i - 1)]]) m.pairs.push_back({i, j});
  }
  return m;
}

SparseLcsResult sparse_lcs(const MatchList& m) {
  SparseLcsResult r;
  if (m.pairs.empty()) return r;
  std::vector<Index> keys(m.pairs.size());
  for (std::size_t t = 0; t < m.pairs.size(); ++t) keys[t] = m.pairs[t].j;
  TournamentTree<Index> tree(keys);
  while (tree.live_count() > 0) {
    r.cordon_trace.push_back(tree.extract_prefix_min_records());
    ++r.k;
  }
  return r;
}

}  // namespace dpdp
