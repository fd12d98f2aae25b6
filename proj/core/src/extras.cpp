#include "dpdp/extras.hpp"

#include <algorithm>
#include <stdexcept>

#include "dpdp/decisions.hpp"
#include "dpdp/parallel.hpp"

namespace dpdp {

KGlwsResult k_glws(const CostModel& model, Index n, Index k) {
  if (model.shape() != Shape::Convex) {
    throw std::invalid_argument("k_glws: convex cost model required");
  }
  if (n < 0 || n > model.size() || k < 1) {
    throw std::invalid_argument("k_glws: need n >= 0 and k >= 1");
  }
  KGlwsResult res;
  res.n = n;
  res.k = k;
  if (k > n) return res;  // no partition into k non-empty clusters

  const auto stride = static_cast<std::size_t>(k + 1);
  res.d.assign(static_cast<std::size_t>(n + 1) * stride, kInf);
  res.best.assign(res.d.size(), -1);
  res.d[0] = 0;  // D[0,0]
  auto dat = [&](Index i, Index kk) -> Cost& {
    return res.d[static_cast<std::size_t>(i) * stride + static_cast<std::size_t>(kk)];
  };
  auto bat = [&](Index i, Index kk) -> Index& {
    return res.best[static_cast<std::size_t>(i) * stride + static_cast<std::size_t>(kk)];
  };

  for (Index kk = 1; kk <= k; ++kk) {
    // column kk from column kk-1: per-state minima of a totally monotone
    // matrix (rows = states 1..n, columns = decisions 0..n-1)
    auto eval = [&](Index r, Index c) -> Cost {
      const Index i = r + 1, j = c;
      if (j >= i) return kInf;
      return add_cost(dat(j, kk - 1), model.w(j, i));
    };
    const auto mins = monotone_minima(n, n, eval, Shape::Convex);
    parallel_for(1, n + 1, [&](Index i) {
      const RowMinimum& rm = mins[static_cast<std::size_t>(i - 1)];
      dat(i, kk) = rm.value;
      bat(i, kk) = is_inf(rm.value) ? -1 : rm.col;
    });
    res.rounds += 1;
  }
  res.cost = dat(n, k);
  return res;
}

namespace {

struct SpanWeight {
  std::vector<Cost> pre;
  ObstWeights kind;
  Index n;

  Cost operator()(Index i, Index j) const {
    if (kind == ObstWeights::Frequencies) {
      return pre[static_cast<std::size_t>(j)] - pre[static_cast<std::size_t>(i - 1)];
    }
    return pre[static_cast<std::size_t>(2 * j + 1)] - pre[static_cast<std::size_t>(2 * (i - 1))];
  }
};

SpanWeight make_span_weight(std::span<const Cost> weights, ObstWeights kind) {
  for (Cost w : weights) {
    if (w < 0) throw std::invalid_argument("obst: weights must be non-negative");
  }
  SpanWeight sw;
  sw.kind = kind;
  if (kind == ObstWeights::Frequencies) {
    sw.n = static_cast<Index>(weights.size());
  } else {
    if (weights.size() % 2 == 0) {
      throw std::invalid_argument("obst: leaf+gap weights need 2n+1 entries");
    }
    sw.n = (static_cast<Index>(weights.size()) - 1) / 2;
  }
  sw.pre.assign(weights.size() + 1, 0);
  for (std::size_t t = 0; t < weights.size(); ++t) sw.pre[t + 1] = sw.pre[t] + weights[t];
  return sw;
}

}  // namespace

ObstResult obst(std::span<const Cost> weights, ObstWeights kind, bool parallel) {
  const SpanWeight w = make_span_weight(weights, kind);
  ObstResult res;
  res.n = w.n;
  const Index n = w.n;
  if (n == 0) return res;
  const auto stride = static_cast<std::size_t>(n + 1);
  res.d.assign(static_cast<std::size_t>(n + 2) * stride, 0);
  res.best.assign(res.d.size(), 0);
  auto dat = [&](Index i, Index j) -> Cost& {
    return res.d[static_cast<std::size_t>(i) * stride + static_cast<std::size_t>(j)];
  };
  auto bat = [&](Index i, Index j) -> Index& {
    return res.best[static_cast<std::size_t>(i) * stride + static_cast<std::size_t>(j)];
  };

  auto fill_cell = [&](Index i, Index j) {
    // Knuth range restriction; smallest root on ties
    const Index lo = (i == j) ? i : bat(i, j - 1);
    const Index hi = (i == j) ? j : bat(i + 1, j);
    Cost best_v = kInf;
    Index best_r = lo;
    for (Index r = lo; r <= hi; ++r) {
      const Cost v = add_cost(dat(i, r - 1), dat(r + 1, j));
      if (v < best_v) {
        best_v = v;
        best_r = r;
      }
    }
    dat(i, j) = add_cost(best_v, w(i, j));
    bat(i, j) = best_r;
  };

  // each anti-diagonal is one frontier; its cells are independent
  for (Index span = 1; span <= n; ++span) {
    if (parallel) {
      parallel_for(1, n - span + 2, [&](Index i) { fill_cell(i, i + span - 1); }, Index{16});
    } else {
      for (Index i = 1; i + span - 1 <= n; ++i) fill_cell(i, i + span - 1);
    }
  }
  res.cost = dat(1, n);
  return res;
}

}  // namespace dpdp
