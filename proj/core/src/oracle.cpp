#include "dpdp/oracle.hpp"

#include <algorithm>

#include "dpdp/extras.hpp"
#include "dpdp/gap.hpp"
#include "dpdp/glws.hpp"

namespace dpdp::oracle {

GlwsSolution brute_glws(const CostModel& model, Index n, Cost d0) {
  GlwsSolution sol;
  sol.dp.assign(static_cast<std::size_t>(n) + 1, 0);
  sol.best.assign(static_cast<std::size_t>(n) + 1, 0);
  sol.dp[0] = d0;
  std::vector<Cost> e(static_cast<std::size_t>(n) + 1);
  e[0] = model.e(d0, 0);
  for (Index i = 1; i <= n; ++i) {
    Cost best_v = kInf;
    Index best_j = 0;
    for (Index j = 0; j < i; ++j) {
      const Cost v = add_cost(e[static_cast<std::size_t>(j)], model.w(j, i));
      if (v < best_v) {
        best_v = v;
        best_j = j;
      }
    }
    sol.dp[static_cast<std::size_t>(i)] = best_v;
    sol.best[static_cast<std::size_t>(i)] = best_j;
    e[static_cast<std::size_t>(i)] = model.e(best_v, i);
  }
  return sol;
}

Index brute_lcs(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
  const std::size_t n = a.size(), m = b.size();
  std::vector<Index> prev(m + 1, 0), cur(m + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      if (a[i - 1] == b[j - 1]) {
        cur[j] = prev[j - 1] + 1;
      } else {
        cur[j] = std::max(prev[j], cur[j - 1]);
      }
    }
    std::swap(prev, cur);
  }
  return prev[m];
}

std::vector<Cost> brute_gap(const GapInstance& inst) {
  const Index n = inst.n(), m = inst.m();
  const auto stride = static_cast<std::size_t>(m + 1);
  std::vector<Cost> d(static_cast<std::size_t>(n + 1) * stride, kInf);
  auto at = [&](Index i, Index j) -> Cost& { return d[static_cast<std::size_t>(i) * stride + static_cast<std::size_t>(j)]; };
  at(0, 0) = 0;
  for (Index i = 0; i <= n; ++i) {
    for (Index j = 0; j <= m; ++j) {
      if (i == 0 && j == 0) continue;
      Cost v = kInf;
      for (Index ip = 0; ip < i; ++ip) v = std::min(v, add_cost(at(ip, j), inst.w1.w(ip, i)));
      for (Index jp = 0; jp < j; ++jp) v = std::min(v, add_cost(at(i, jp), inst.w2.w(jp, j)));
      if (i > 0 && j > 0 && inst.a[static_cast<std::size_t>(i - 1)] == inst.b[static_cast<std::size_t>(j - 1)]) {
        v = std::min(v, at(i - 1, j - 1));
      }
      at(i, j) = v;
    }
  }
  return d;
}

Cost brute_kglws(const CostModel& model, Index n, Index k) {
  if (k > n) return kInf;
  std::vector<Cost> prev(static_cast<std::size_t>(n) + 1, kInf), cur;
  prev[0] = 0;
  for (Index kk = 1; kk <= k; ++kk) {
    cur.assign(static_cast<std::size_t>(n) + 1, kInf);
    for (Index i = 1; i <= n; ++i) {
      for (Index j = 0; j < i; ++j) {
        const Cost v = add_cost(prev[static_cast<std::size_t>(j)], model.w(j, i));
        cur[static_cast<std::size_t>(i)] = std::min(cur[static_cast<std::size_t>(i)], v);
      }
    }
    std::swap(prev, cur);
  }
  return prev[static_cast<std::size_t>(n)];
}

Cost brute_obst(std::span<const Cost> weights, ObstWeights kind) {
  Index n = 0;
  std::vector<Cost> pre;  // span weight w(i,j) via prefix sums, per convention
  if (kind == ObstWeights::Frequencies) {
    n = static_cast<Index>(weights.size());
    pre.assign(static_cast<std::size_t>(n) + 1, 0);
    for (Index t = 0; t < n; ++t) pre[static_cast<std::size_t>(t + 1)] = pre[static_cast<std::size_t>(t)] + weights[static_cast<std::size_t>(t)];
  } else {
    n = (static_cast<Index>(weights.size()) - 1) / 2;
    pre.assign(weights.size() + 1, 0);
    for (std::size_t t = 0; t < weights.size(); ++t) pre[t + 1] = pre[t] + weights[t];
  }
  if (n <= 0) return 0;
  auto span_w = [&](Index i, Index j) -> Cost {
    if (kind == ObstWeights::Frequencies) return pre[static_cast<std::size_t>(j)] - pre[static_cast<std::size_t>(i - 1)];
    return pre[static_cast<std::size_t>(2 * j + 1)] - pre[static_cast<std::size_t>(2 * (i - 1))];
  };
  const auto stride = static_cast<std::size_t>(n + 1);
  std::vector<Cost> d(static_cast<std::size_t>(n + 2) * stride, 0);
  auto at = [&](Index i, Index j) -> Cost& { return d[static_cast<std::size_t>(i) * stride + static_cast<std::size_t>(j)]; };
  for (Index span = 1; span <= n; ++span) {
    for (Index i = 1; i + span - 1 <= n; ++i) {
      const Index j = i + span - 1;
      Cost best = kInf;
      for (Index r = i; r <= j; ++r) {
        best = std::min(best, add_cost(at(i, r - 1), at(r + 1, j)));
      }
      at(i, j) = add_cost(best, span_w(i, j));
    }
  }
  return at(1, n);
}

}  // namespace dpdp::oracle
