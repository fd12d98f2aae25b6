#include "dpdp/glws.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <stdexcept>

#include "dpdp/parallel.hpp"

namespace dpdp {

Index GlwsSolution::solution_size() const {
  Index count = 0;
  for (Index i = n(); i > 0; i = best[static_cast<std::size_t>(i)]) ++count;
  return count;
}

namespace {

void check_args(const CostModel& model, Index n) {
  if (n < 0) throw std::invalid_argument("glws: n must be non-negative");
  if (n > model.size()) throw std::invalid_argument("glws: n exceeds the cost model size");
}

}  // namespace

GlwsSolution glws_seq(const CostModel& model, Index n, Cost d0) {
  check_args(model, n);
  GlwsSolution sol;
  sol.dp.assign(static_cast<std::size_t>(n) + 1, 0);
  sol.best.assign(static_cast<std::size_t>(n) + 1, 0);
  sol.dp[0] = d0;
  if (n == 0) return sol;

  std::vector<Cost> e(static_cast<std::size_t>(n) + 1);
  e[0] = model.e(d0, 0);
  auto val = [&](Index j, Index i) {
    return add_cost(e[static_cast<std::size_t>(j)], model.w(j, i));
  };

  // triples ([lo,hi], j) covering the not-yet-finalized states in order
  std::deque<DecisionTriple> q;
  q.push_back({1, n, 0});

  for (Index i = 1; i <= n; ++i) {
    const Index b = q.front().decision;
    sol.best[static_cast<std::size_t>(i)] = b;
    sol.dp[static_cast<std::size_t>(i)] = val(b, i);
    e[static_cast<std::size_t>(i)] = model.e(sol.dp[static_cast<std::size_t>(i)], i);

    // coverage advances past i
    if (++q.front().lo > q.front().hi) q.pop_front();
    if (i == n) break;

    if (model.shape() == Shape::Convex) {
      // decision i takes over a suffix [pos, n]; dominated triples pop from
      // the back, the boundary triple is split by binary search
      Index pos = n + 1;
      while (!q.empty()) {
        DecisionTriple& t = q.back();
        if (val(i, t.lo) < val(t.decision, t.lo)) {
          pos = t.lo;
          q.pop_back();
          continue;
        }
        Index a = t.lo + 1, z = t.hi, found = n + 1;
        while (a <= z) {
          const Index m = a + (z - a) / 2;
          if (val(i, m) < val(t.decision, m)) {
            found = m;
            z = m - 1;
          } else {
            a = m + 1;
          }
        }
        if (found <= t.hi) {
          t.hi = found - 1;
          pos = found;
        }
        break;
      }
      if (pos <= n) q.push_back({pos, n, i});
    } else {
      // concave: decision i takes over a prefix [i+1, pos]
      Index pos = i;
      while (!q.empty()) {
        DecisionTriple& t = q.front();
        if (val(i, t.hi) < val(t.decision, t.hi)) {
          pos = t.hi;
          q.pop_front();
          continue;
        }
        Index a = t.lo, z = t.hi - 1, found = i;
        while (a <= z) {
          const Index m = a + (z - a) / 2;
          if (val(i, m) < val(t.decision, m)) {
            found = m;
            a = m + 1;
          } else {
            z = m - 1;
          }
        }
        if (found >= t.lo) {
          t.lo = found + 1;
          pos = found;
        }
        break;
      }
      if (pos > i) q.push_front({i + 1, pos, i});
    }
  }
  return sol;
}

namespace {

// First state after j that j can successfully relax, given the tentative
// E value of j; n+1 when none. Searches triple endpoints of B first, then
// within the boundary triple.
Index convex_sentinel(const CostModel& model, std::span<const Cost> e, Cost e_j,
                      const DecisionIntervals& b, Index j) {
  const Index n = model.size();
  if (j >= n) return n + 1;
  auto win = [&](Index state, Index decision) {
    return add_cost(e_j, model.w(j, state)) <
           add_cost(e[static_cast<std::size_t>(decision)], model.w(decision, state));
  };
  const Index q = b.size();
  // first triple with hi > j (contains candidate states)
  Index t0 = q;
  {
    Index a = 0, z = q - 1;
    while (a <= z) {
      const Index m = a + (z - a) / 2;
      if (b.triple(m).hi > j) {
        t0 = m;
        z = m - 1;
      } else {
        a = m + 1;
      }
    }
  }
  if (t0 >= q) return n + 1;
  auto candidate = [&](Index t) { return std::max(b.triple(t).lo, j + 1); };
  // first triple whose candidate state is relaxed by j
  Index ts = q;
  {
    Index a = t0, z = q - 1;
    while (a <= z) {
      const Index m = a + (z - a) / 2;
      if (win(candidate(m), b.triple(m).decision)) {
        ts = m;
        z = m - 1;
      } else {
        a = m + 1;
      }
    }
  }
  if (ts > t0) {
    // the crossover may sit inside the last triple whose candidate lost
    const DecisionTriple& prev = b.triple(ts - 1);
    Index a = candidate(ts - 1) + 1, z = prev.hi, found = n + 1;
    while (a <= z) {
      const Index m = a + (z - a) / 2;
      if (win(m, prev.decision)) {
        found = m;
        z = m - 1;
      } else {
        a = m + 1;
      }
    }
    if (found <= prev.hi) return found;
  }
  return ts < q ? candidate(ts) : n + 1;
}

Index concave_sentinel(const CostModel& model, std::span<const Cost> e, Cost e_j,
                       const DecisionIntervals& b, Index j) {
  const Index n = model.size();
  if (j >= n) return n + 1;
  const Index i = j + 1;
  const Index decision = b.lookup(i);
  const bool w = add_cost(e_j, model.w(j, i)) <
                 add_cost(e[static_cast<std::size_t>(decision)], model.w(decision, i));
  return w ? i : n + 1;
}

}  // namespace

CordonResult find_cordon(const CostModel& model, std::span<const Cost> e,
                         const DecisionIntervals& b, Index now) {
  const Index n = model.size();
  CordonResult res;
  res.cordon = n + 1;
  std::vector<Cost> tent_e;  // E of tentative states now+1..r, in batch order

  for (Index t = 1;; ++t) {
    const Index l = now + (Index{1} << (t - 1));
    const Index r = std::min(n, now + (Index{1} << t) - 1);
    if (l > n) break;
    const std::size_t want = static_cast<std::size_t>(r - now);
    res.batch_values.resize(want);
    res.batch_best.resize(want);
    tent_e.resize(want);

    parallel_for(
        l, r + 1,
        [&](Index j) {
          const std::size_t slot = static_cast<std::size_t>(j - now - 1);
          const Index bj = b.lookup(j);
          const Cost v = add_cost(e[static_cast<std::size_t>(bj)], model.w(bj, j));
          res.batch_values[slot] = v;
          res.batch_best[slot] = bj;
          tent_e[slot] = model.e(v, j);
        },
        Index{256});
    res.examined += r - l + 1;

    const Index batch_min = parallel_reduce(
        l, r + 1, n + 1,
        [&](Index j) {
          const Cost e_j = tent_e[static_cast<std::size_t>(j - now - 1)];
          return model.shape() == Shape::Convex
                     ? convex_sentinel(model, e, e_j, b, j)
                     : concave_sentinel(model, e, e_j, b, j);
        },
        [](Index a, Index b2) { return std::min(a, b2); }, Index{256});
    res.cordon = std::min(res.cordon, batch_min);
    if (res.cordon <= r + 1) break;
  }

  if (now < n && res.cordon <= now + 1) {
    // a valid Monge model always leaves state now+1 ready
    throw std::logic_error("find_cordon: empty frontier; cost shape is misdeclared");
  }
  res.batch_values.resize(static_cast<std::size_t>(res.cordon - 1 - now));
  res.batch_best.resize(static_cast<std::size_t>(res.cordon - 1 - now));
  return res;
}

GlwsSolution glws_par(const CostModel& model, Index n, Cost d0) {
  check_args(model, n);
  GlwsSolution sol;
  sol.dp.assign(static_cast<std::size_t>(n) + 1, 0);
  sol.best.assign(static_cast<std::size_t>(n) + 1, 0);
  sol.dp[0] = d0;
  if (n == 0) return sol;

  std::vector<Cost> e(static_cast<std::size_t>(n) + 1);
  e[0] = model.e(d0, 0);
  DecisionIntervals b = DecisionIntervals::single(1, n, 0);

  Index now = 0;
  while (now < n) {
    const auto round_start = std::chrono::steady_clock::now();
    CordonResult cr = find_cordon(model, e, b, now);
    const Index cordon = cr.cordon;
    const Index h = cordon - 1 - now;

    parallel_for(
        now + 1, cordon,
        [&](Index i) {
          const std::size_t slot = static_cast<std::size_t>(i - now - 1);
          sol.dp[static_cast<std::size_t>(i)] = cr.batch_values[slot];
          sol.best[static_cast<std::size_t>(i)] = cr.batch_best[slot];
          e[static_cast<std::size_t>(i)] = model.e(cr.batch_values[slot], i);
        },
        Index{512});

    if (cordon <= n) {
      if (model.shape() == Shape::Convex) {
        // post-cordon best decisions all lie in the new batch
        b = find_intervals(model, e, now + 1, cordon - 1, cordon, n);
      } else {
        DecisionIntervals b_new = find_intervals(model, e, now + 1, cordon - 1, cordon, n);
        b = merge_decisions(model, e, b.clipped(cordon, n), b_new);
      }
    } else {
      b = {};
    }

    sol.stats.rounds += 1;
    sol.stats.frontier_sizes.push_back(h);
    sol.stats.wasted_states += std::max<Index>(0, cr.examined - h);
    sol.stats.elapsed_per_round.push_back(
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - round_start)
            .count());
    now = cordon - 1;
  }
  return sol;
}

}  // namespace dpdp
