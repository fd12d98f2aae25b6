#include "dpdp/gap.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <memory>
#include <stdexcept>

#include "dpdp/decisions.hpp"

namespace dpdp {

GapInstance make_gap_instance(std::vector<std::uint8_t> a, std::vector<std::uint8_t> b,
                              CostModel w1, CostModel w2) {
  if (w1.size() < static_cast<Index>(a.size())) {
    throw std::invalid_argument("gap: w1 smaller than sequence A");
  }
  if (w2.size() < static_cast<Index>(b.size())) {
    throw std::invalid_argument("gap: w2 smaller than sequence B");
  }
  for (const CostModel* m : {&w1, &w2}) {
    const auto check = monge_check(*m, 256, 0x9e3779b97f4a7c15ull);
    if (!check.ok) {
      throw std::invalid_argument("gap: deletion cost fails its declared Monge condition");
    }
  }
  MatchList matches = build_match_list(a, b);
  return GapInstance{std::move(a), std::move(b), std::move(w1), std::move(w2), std::move(matches)};
}

namespace {

// Per-axis GLWS state of one row or column: the compressed best decisions for
// the unfinalized suffix. An empty structure means no finalized decisions yet,
// i.e. an infinite envelope.
struct AxisEnvelope {
  const DecisionIntervals* b;
  Index limit;  // last state of the axis

  bool covered(Index s) const { return !b->empty() && s >= b->cover_lo() && s <= b->cover_hi(); }
};

class GapSolver {
 public:
  explicit GapSolver(const GapInstance& inst)
      : inst_(inst), n_(inst.n()), m_(inst.m()), stride_(static_cast<std::size_t>(m_ + 1)) {
    const std::size_t cells = static_cast<std::size_t>(n_ + 1) * stride_;
    d_.assign(cells, kInf);
    bp_.assign(cells, -1);
    bq_.assign(cells, -1);
    tent_.assign(cells, kInf);
    tbp_.assign(cells, -1);
    tbq_.assign(cells, -1);
    d_[0] = 0;
    frontier_.assign(static_cast<std::size_t>(n_) + 1, 0);
    frontier_[0] = 1;
    brow_.resize(static_cast<std::size_t>(n_) + 1);
    bcol_.resize(static_cast<std::size_t>(m_) + 1);
    colfront_.assign(static_cast<std::size_t>(m_) + 1, 0);
    colfront_[0] = 1;
    if (m_ >= 1) brow_[0] = DecisionIntervals::single(1, m_, 0);
    if (n_ >= 1) bcol_[0] = DecisionIntervals::single(1, n_, 0);
    remaining_ = static_cast<Index>(cells) - 1;
  }

  GapResult solve() {
    senti_.assign(static_cast<std::size_t>(n_) + 1, m_ + 1);
    senti_pm_.assign(static_cast<std::size_t>(n_) + 1, m_ + 1);
    hw_.assign(static_cast<std::size_t>(n_) + 1, -1);
    while (remaining_ > 0) run_round();
    GapResult res;
    res.n = n_;
    res.m = m_;
    res.d = std::move(d_);
    res.best_p = std::move(bp_);
    res.best_q = std::move(bq_);
    res.stats = std::move(stats_);
    return res;
  }

 private:
  std::size_t idx(Index i, Index j) const {
    return static_cast<std::size_t>(i) * stride_ + static_cast<std::size_t>(j);
  }
  Cost dv(Index i, Index j) const { return d_[idx(i, j)]; }
  bool finalized(Index i, Index j) const { return j < frontier_[static_cast<std::size_t>(i)]; }

  void place_sentinel(std::atomic<Index>* sent, Index row, Index col) {
    std::atomic<Index>& slot = sent[row];
    Index cur = slot.load(std::memory_order_relaxed);
    while (col < cur && !slot.compare_exchange_weak(cur, col, std::memory_order_relaxed)) {
    }
  }

  // First unfinalized state after `from` on an axis that the tentative value
  // `e_from` successfully relaxes through cost w; limit+1 when none. Mirrors
  // the 1D sentinel search over the compressed decision structure.
  template <class W, class EAt>
  Index axis_sentinel(Shape shape, const W& w, const EAt& e_at, const AxisEnvelope& env,
                      Index from, Cost e_from) const {
    const Index limit = env.limit;
    if (from >= limit || is_inf(e_from)) return limit + 1;
    if (env.b->empty()) return from + 1;  // infinite envelope: anything is relaxed
    const DecisionIntervals& b = *env.b;
    auto win = [&](Index state, Index decision) {
      return add_cost(e_from, w(from, state)) < add_cost(e_at(decision), w(decision, state));
    };
    if (shape == Shape::Concave) {
      const Index s = from + 1;
      if (!env.covered(s)) return limit + 1;  // finalized, cannot be relaxed
      return win(s, b.lookup(s)) ? s : limit + 1;
    }
    const Index q = b.size();
    Index t0 = q;
    {
      Index a = 0, z = q - 1;
      while (a <= z) {
        const Index mm = a + (z - a) / 2;
        if (b.triple(mm).hi > from) {
          t0 = mm;
          z = mm - 1;
        } else {
          a = mm + 1;
        }
      }
    }
    if (t0 >= q) return limit + 1;
    auto candidate = [&](Index t) { return std::max(b.triple(t).lo, from + 1); };
    Index ts = q;
    {
      Index a = t0, z = q - 1;
      while (a <= z) {
        const Index mm = a + (z - a) / 2;
        if (win(candidate(mm), b.triple(mm).decision)) {
          ts = mm;
          z = mm - 1;
        } else {
          a = mm + 1;
        }
      }
    }
    if (ts > t0) {
      // the crossover may sit inside the last triple whose candidate lost
      const DecisionTriple& prev = b.triple(ts - 1);
      Index a = candidate(ts - 1) + 1, z = prev.hi, found = limit + 1;
      while (a <= z) {
        const Index mm = a + (z - a) / 2;
        if (win(mm, prev.decision)) {
          found = mm;
          z = mm - 1;
        } else {
          a = mm + 1;
        }
      }
      if (found <= prev.hi) return found;
    }
    return ts < q ? candidate(ts) : limit + 1;
  }

  void run_round() {
    const auto round_start = std::chrono::steady_clock::now();
    std::fill(senti_.begin(), senti_.end(), m_ + 1);
    std::fill(hw_.begin(), hw_.end(), Index{-1});

    // diagonal-match sentinels, placed eagerly for every match whose
    // predecessor is not finalized
    auto sent = std::make_unique<std::atomic<Index>[]>(static_cast<std::size_t>(n_) + 1);
    for (Index i = 0; i <= n_; ++i) sent[i].store(m_ + 1, std::memory_order_relaxed);
    parallel_for(0, inst_.matches.size(), [&](Index t) {
      const MatchPair& p = inst_.matches.pairs[static_cast<std::size_t>(t)];
      if (!finalized(p.i - 1, p.j - 1)) place_sentinel(sent.get(), p.i, p.j);
    });
    for (Index i = 0; i <= n_; ++i) {
      senti_[static_cast<std::size_t>(i)] =
          std::min(senti_[static_cast<std::size_t>(i)], sent[i].load(std::memory_order_relaxed));
    }
    refresh_prefix_min();
    for (Index i = 0; i <= n_; ++i) hw_[static_cast<std::size_t>(i)] = frontier_[static_cast<std::size_t>(i)] - 1;

    // synchronized prefix doubling across all rows
    for (Index t = 1;; ++t) {
      const Index extend = (Index{1} << t) - 1;
      bool any = false;
      for (Index i = 0; i <= n_ && !any; ++i) {
        any = hw_[static_cast<std::size_t>(i)] < target(i, extend);
      }
      if (!any) break;
      for (Index i = 0; i <= n_; ++i) sent[i].store(m_ + 1, std::memory_order_relaxed);
      parallel_for(
          0, n_ + 1,
          [&](Index i) {
            const Index to = target(i, extend);
            for (Index j = hw_[static_cast<std::size_t>(i)] + 1; j <= to; ++j) {
              compute_tentative(i, j, sent.get());
            }
            hw_[static_cast<std::size_t>(i)] = std::max(hw_[static_cast<std::size_t>(i)], to);
          },
          Index{1});
      bool changed = false;
      for (Index i = 0; i <= n_; ++i) {
        const Index s = sent[i].load(std::memory_order_relaxed);
        if (s < senti_[static_cast<std::size_t>(i)]) {
          senti_[static_cast<std::size_t>(i)] = s;
          changed = true;
        }
      }
      if (changed) refresh_prefix_min();
    }

    // finalize everything inside the cordon, invalidate the rest
    Index finalized_now = 0;
    Index waste = 0;
    for (Index i = 0; i <= n_; ++i) {
      const Index oldf = frontier_[static_cast<std::size_t>(i)];
      const Index nf = std::min(senti_pm_[static_cast<std::size_t>(i)], m_ + 1);
      if (hw_[static_cast<std::size_t>(i)] < nf - 1) {
        throw std::logic_error("gap: cordon not fully examined");
      }
      for (Index j = oldf; j < nf; ++j) {
        d_[idx(i, j)] = tent_[idx(i, j)];
        bp_[idx(i, j)] = tbp_[idx(i, j)];
        bq_[idx(i, j)] = tbq_[idx(i, j)];
      }
      finalized_now += nf - oldf;
      waste += std::max<Index>(0, hw_[static_cast<std::size_t>(i)] - (nf - 1));
    }
    if (finalized_now == 0) {
      throw std::logic_error("gap: empty frontier; cost shape is misdeclared");
    }

    std::vector<Index> old_frontier = frontier_;
    for (Index i = 0; i <= n_; ++i) {
      frontier_[static_cast<std::size_t>(i)] = std::min(senti_pm_[static_cast<std::size_t>(i)], m_ + 1);
    }
    remaining_ -= finalized_now;
    update_structures(old_frontier);

    stats_.rounds += 1;
    stats_.frontier_sizes.push_back(finalized_now);
    stats_.wasted_states += waste;
    stats_.elapsed_per_round.push_back(
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - round_start)
            .count());
  }

  Index target(Index i, Index extend) const {
    const Index f = frontier_[static_cast<std::size_t>(i)];
    return std::min({f + extend - 1, senti_pm_[static_cast<std::size_t>(i)] - 1, m_});
  }

  void refresh_prefix_min() {
    Index run = m_ + 1;
    for (Index i = 0; i <= n_; ++i) {
      run = std::min(run, senti_[static_cast<std::size_t>(i)]);
      senti_pm_[static_cast<std::size_t>(i)] = run;
    }
  }

  void compute_tentative(Index i, Index j, std::atomic<Index>* sent) {
    if (i == 0 && j == 0) return;
    // P from the column structure, Q from the row structure, both over
    // finalized decisions only
    Cost pv = kInf, qv = kInf;
    Index pb = -1, qb = -1;
    const AxisEnvelope col_env{&bcol_[static_cast<std::size_t>(j)], n_};
    const AxisEnvelope row_env{&brow_[static_cast<std::size_t>(i)], m_};
    if (i >= 1 && col_env.covered(i)) {
      pb = col_env.b->lookup(i);
      pv = add_cost(dv(pb, j), inst_.w1.w(pb, i));
    }
    if (j >= 1 && row_env.covered(j)) {
      qb = row_env.b->lookup(j);
      qv = add_cost(dv(i, qb), inst_.w2.w(qb, j));
    }
    Cost v = std::min(pv, qv);
    if (i >= 1 && j >= 1 && inst_.a[static_cast<std::size_t>(i - 1)] == inst_.b[static_cast<std::size_t>(j - 1)] &&
        finalized(i - 1, j - 1)) {
      v = std::min(v, dv(i - 1, j - 1));
    }
    tent_[idx(i, j)] = v;
    tbp_[idx(i, j)] = pb;
    tbq_[idx(i, j)] = qb;
    if (is_inf(v)) return;

    // sentinels from this tentative state relaxing others in its column/row
    const Index sc = axis_sentinel(
        inst_.w1.shape(), [&](Index a, Index b2) { return inst_.w1.w(a, b2); },
        [&](Index r) { return dv(r, j); }, col_env, i, v);
    if (sc <= n_) place_sentinel(sent, sc, j);
    const Index sr = axis_sentinel(
        inst_.w2.shape(), [&](Index a, Index b2) { return inst_.w2.w(a, b2); },
        [&](Index c) { return dv(i, c); }, row_env, j, v);
    if (sr <= m_) place_sentinel(sent, i, sr);
  }

  void update_structures(const std::vector<Index>& old_frontier) {
    parallel_for(
        0, n_ + 1,
        [&](Index i) {
          const Index oldf = old_frontier[static_cast<std::size_t>(i)];
          const Index nf = frontier_[static_cast<std::size_t>(i)];
          auto val = [&](Index jp, Index j) { return add_cost(dv(i, jp), inst_.w2.w(jp, j)); };
          if (nf > m_) {
            brow_[static_cast<std::size_t>(i)] = {};
          } else if (nf > oldf) {
            DecisionIntervals fresh =
                find_intervals_fn(inst_.w2.shape(), val, oldf, nf - 1, nf, m_);
            DecisionIntervals& cur = brow_[static_cast<std::size_t>(i)];
            cur = cur.empty() ? std::move(fresh)
                              : detail::merge_decisions_fn(inst_.w2.shape(), val,
                                                           cur.clipped(nf, m_), fresh);
          }
        },
        Index{1});

    std::vector<Index> old_colfront = colfront_;
    for (Index j = 0; j <= m_; ++j) {
      // rows with frontier > j form a prefix of the staircase
      Index a = 0, z = n_, cnt = 0;
      while (a <= z) {
        const Index mm = a + (z - a) / 2;
        if (frontier_[static_cast<std::size_t>(mm)] > j) {
          cnt = mm + 1;
          a = mm + 1;
        } else {
          z = mm - 1;
        }
      }
      colfront_[static_cast<std::size_t>(j)] = cnt;
    }
    parallel_for(
        0, m_ + 1,
        [&](Index j) {
          const Index oldf = old_colfront[static_cast<std::size_t>(j)];
          const Index nf = colfront_[static_cast<std::size_t>(j)];
          auto val = [&](Index ip, Index i) { return add_cost(dv(ip, j), inst_.w1.w(ip, i)); };
          if (nf > n_) {
            bcol_[static_cast<std::size_t>(j)] = {};
          } else if (nf > oldf) {
            DecisionIntervals fresh =
                find_intervals_fn(inst_.w1.shape(), val, oldf, nf - 1, nf, n_);
            DecisionIntervals& cur = bcol_[static_cast<std::size_t>(j)];
            cur = cur.empty() ? std::move(fresh)
                              : detail::merge_decisions_fn(inst_.w1.shape(), val,
                                                           cur.clipped(nf, n_), fresh);
          }
        },
        Index{1});
  }

  const GapInstance& inst_;
  Index n_, m_;
  std::size_t stride_;
  std::vector<Cost> d_, tent_;
  std::vector<Index> bp_, bq_, tbp_, tbq_;
  std::vector<Index> frontier_, colfront_;
  std::vector<DecisionIntervals> brow_, bcol_;
  std::vector<Index> senti_, senti_pm_, hw_;
  Index remaining_ = 0;
  RoundStats stats_;
};

GapResult transpose(GapResult r) {
  GapResult out;
  out.n = r.m;
  out.m = r.n;
  out.stats = std::move(r.stats);
  const std::size_t cells = r.d.size();
  out.d.resize(cells);
  out.best_p.resize(cells);
  out.best_q.resize(cells);
  for (Index i = 0; i <= out.n; ++i) {
    for (Index j = 0; j <= out.m; ++j) {
      const std::size_t to = static_cast<std::size_t>(i * (out.m + 1) + j);
      const std::size_t from = static_cast<std::size_t>(j * (r.m + 1) + i);
      out.d[to] = r.d[from];
      out.best_p[to] = r.best_q[from];
      out.best_q[to] = r.best_p[from];
    }
  }
  return out;
}

}  // namespace

GapResult gap_solve(const GapInstance& inst) {
  if (inst.m() > inst.n()) {
    // solve in the n >= m orientation, transpose the tables back
    GapInstance flipped{inst.b, inst.a, inst.w2, inst.w1,
                        build_match_list(inst.b, inst.a)};
    return transpose(GapSolver(flipped).solve());
  }
  return GapSolver(inst).solve();
}

Index gap_effective_depth(const GapInstance& inst, const GapResult& result) {
  const Index n = result.n, m = result.m;
  if (n != inst.n() || m != inst.m() ||
      result.best_p.size() != static_cast<std::size_t>((n + 1) * (m + 1)) ||
      result.best_q.size() != result.best_p.size()) {
    throw std::invalid_argument("gap_effective_depth: missing or mismatched best records");
  }
  const std::size_t stride = static_cast<std::size_t>(m + 1);
  std::vector<Index> ed(static_cast<std::size_t>(n + 1) * stride, 0);
  auto at = [&](Index i, Index j) -> Index& {
    return ed[static_cast<std::size_t>(i) * stride + static_cast<std::size_t>(j)];
  };
  for (Index i = 0; i <= n; ++i) {
    for (Index j = 0; j <= m; ++j) {
      if (i == 0 && j == 0) continue;
      Index v = 0;
      if (i >= 1) v = std::max(v, at(i - 1, j));
      if (j >= 1) v = std::max(v, at(i, j - 1));
      const Index bp = result.best_p[static_cast<std::size_t>(i) * stride + static_cast<std::size_t>(j)];
      const Index bq = result.best_q[static_cast<std::size_t>(i) * stride + static_cast<std::size_t>(j)];
      if (bp >= 0) {
        if (bp >= i) throw std::invalid_argument("gap_effective_depth: invalid best_p record");
        v = std::max(v, at(bp, j) + 1);
      }
      if (bq >= 0) {
        if (bq >= j) throw std::invalid_argument("gap_effective_depth: invalid best_q record");
        v = std::max(v, at(i, bq) + 1);
      }
      if (i >= 1 && j >= 1 &&
          inst.a[static_cast<std::size_t>(i - 1)] == inst.b[static_cast<std::size_t>(j - 1)]) {
        v = std::max(v, at(i - 1, j - 1) + 1);
      }
      at(i, j) = v;
    }
  }
  return at(n, m);
}

}  // namespace dpdp
