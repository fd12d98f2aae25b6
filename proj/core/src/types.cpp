#include "dpdp/types.hpp"

#include <algorithm>
#include <stdexcept>

namespace dpdp {

namespace {

void check_best(std::span<const Index> best) {
  for (Index i = 1; i < static_cast<Index>(best.size()); ++i) {
    if (best[i] < 0 || best[i] >= i) {
      throw std::invalid_argument("best decision array: best[i] must satisfy 0 <= best[i] < i");
    }
  }
}

}  // namespace

Index perfect_depth(std::span<const Index> best) {
  if (best.size() <= 1) return 0;
  check_best(best);
  const Index n = static_cast<Index>(best.size()) - 1;
  std::vector<Index> depth(n + 1, 0);
  Index out = 0;
  for (Index i = 1; i <= n; ++i) {
    depth[i] = depth[best[i]] + 1;
    out = std::max(out, depth[i]);
  }
  return out;
}

Index effective_depth_glws(std::span<const Index> best) {
  if (best.size() <= 1) return 0;
  check_best(best);
  const Index n = static_cast<Index>(best.size()) - 1;
  std::vector<Index> ed(n + 1, 0);
  for (Index i = 1; i <= n; ++i) {
    ed[i] = std::max(ed[i - 1], ed[best[i]] + 1);
  }
  return ed[n];
}

DepthReport depth_report(std::span<const Index> best) {
  return DepthReport{perfect_depth(best), effective_depth_glws(best)};
}

}  // namespace dpdp
