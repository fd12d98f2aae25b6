#pragma once

#include <memory>
#include <span>
#include <vector>

#include "dpdp/cost.hpp"
#include "dpdp/parallel.hpp"
#include "dpdp/types.hpp"

namespace dpdp {

// States in [lo, hi] currently share best decision `decision`.
struct DecisionTriple {
  Index lo = 0;
  Index hi = -1;
  Index decision = -1;

  friend bool operator==(const DecisionTriple&, const DecisionTriple&) = default;
};

// Compressed best-decision array: sorted disjoint triples exactly tiling the
// coverage range, adjacent triples maximally merged. Immutable once built.
class DecisionIntervals {
 public:
  DecisionIntervals() = default;  // empty coverage

  // Validates that `triples` tile [lo, hi]; merges adjacent duplicates.
  DecisionIntervals(std::vector<DecisionTriple> triples, Index lo, Index hi);

  static DecisionIntervals single(Index lo, Index hi, Index decision);

  bool empty() const { return lo_ > hi_; }
  Index cover_lo() const { return lo_; }
  Index cover_hi() const { return hi_; }
  Index size() const { return static_cast<Index>(triples_.size()); }
  std::span<const DecisionTriple> triples() const { return triples_; }
  const DecisionTriple& triple(Index t) const { return triples_[static_cast<std::size_t>(t)]; }

  // Best decision of state i; O(log size). Throws std::out_of_range when i is
  // outside the coverage range.
  Index lookup(Index i) const;

  // Intersection with [lo, hi] (possibly empty).
  DecisionIntervals clipped(Index lo, Index hi) const;

 private:
  std::vector<DecisionTriple> triples_;
  Index lo_ = 0;
  Index hi_ = -1;
};

namespace detail {

inline constexpr Index kFindIntervalsSeqStates = 64;
inline constexpr Index kMonotoneMinimaSeqRows = 64;

// Recursion tree of FindIntervals; flattening in-order yields B sorted by lo.
struct IntervalNode {
  DecisionTriple mid;
  std::unique_ptr<IntervalNode> left, right;
  std::vector<DecisionTriple> run;  // leaf: triples already in order
  bool is_run = false;
  Index count = 0;
};

template <class Val>
Index argmin_scan(Index j_lo, Index j_hi, Index i, const Val& val) {
  // smallest-index tie-break; fixed reduction tree keeps this deterministic
  struct Best {
    Cost v;
    Index j;
  };
  auto better = [](const Best& a, const Best& b) {
    if (a.v != b.v) return a.v < b.v ? a : b;
    return a.j <= b.j ? a : b;
  };
  Best r = parallel_reduce(
      j_lo, j_hi + 1, Best{kInf, j_hi + 1},
      [&](Index j) { return Best{val(j, i), j}; },
      [&](const Best& a, const Best& b) { return better(a, b); }, Index{2048});
  return r.j;
}

template <class Val>
void find_intervals_seq(Shape shape, const Val& val, Index j_lo, Index j_hi,
                        Index i_lo, Index i_hi, std::vector<DecisionTriple>& out) {
  if (i_lo > i_hi) return;
  if (j_lo == j_hi) {
    out.push_back({i_lo, i_hi, j_lo});
    return;
  }
  const Index i_m = i_lo + (i_hi - i_lo) / 2;
  Index j_m = j_lo;
  Cost best = val(j_lo, i_m);
  for (Index j = j_lo + 1; j <= j_hi; ++j) {
    const Cost v = val(j, i_m);
    if (v < best) {
      best = v;
      j_m = j;
    }
  }
  if (shape == Shape::Convex) {
    find_intervals_seq(shape, val, j_lo, j_m, i_lo, i_m - 1, out);
    out.push_back({i_m, i_m, j_m});
    find_intervals_seq(shape, val, j_m, j_hi, i_m + 1, i_hi, out);
  } else {
    find_intervals_seq(shape, val, j_m, j_hi, i_lo, i_m - 1, out);
    out.push_back({i_m, i_m, j_m});
    find_intervals_seq(shape, val, j_lo, j_m, i_m + 1, i_hi, out);
  }
}

template <class Val>
std::unique_ptr<IntervalNode> find_intervals_tree(Shape shape, const Val& val,
                                                  Index j_lo, Index j_hi,
                                                  Index i_lo, Index i_hi) {
  if (i_lo > i_hi) return nullptr;
  if (i_hi - i_lo + 1 <= kFindIntervalsSeqStates || j_lo == j_hi) {
    auto node = std::make_unique<IntervalNode>();
    node->is_run = true;
    find_intervals_seq(shape, val, j_lo, j_hi, i_lo, i_hi, node->run);
    node->count = static_cast<Index>(node->run.size());
    return node;
  }
  const Index i_m = i_lo + (i_hi - i_lo) / 2;
  const Index j_m = argmin_scan(j_lo, j_hi, i_m, val);
  auto node = std::make_unique<IntervalNode>();
  node->mid = {i_m, i_m, j_m};
  if (shape == Shape::Convex) {
    par_do([&] { node->left = find_intervals_tree(shape, val, j_lo, j_m, i_lo, i_m - 1); },
           [&] { node->right = find_intervals_tree(shape, val, j_m, j_hi, i_m + 1, i_hi); });
  } else {
    par_do([&] { node->left = find_intervals_tree(shape, val, j_m, j_hi, i_lo, i_m - 1); },
           [&] { node->right = find_intervals_tree(shape, val, j_lo, j_m, i_m + 1, i_hi); });
  }
  node->count = 1 + (node->left ? node->left->count : 0) + (node->right ? node->right->count : 0);
  return node;
}

void flatten_interval_tree(const IntervalNode* node, std::span<DecisionTriple> out);
std::vector<DecisionTriple> merge_adjacent(std::vector<DecisionTriple> triples);

}  // namespace detail

// FindIntervals: best decisions over candidate range [j_lo, j_hi] for every
// state in [i_lo, i_hi], as a freshly merged DecisionIntervals.
// `val(j, i)` evaluates the full transition E[j] + w(j, i).
template <class Val>
DecisionIntervals find_intervals_fn(Shape shape, const Val& val, Index j_lo,
                                    Index j_hi, Index i_lo, Index i_hi) {
  if (i_lo > i_hi) return {};
  if (j_lo > j_hi) throw std::invalid_argument("find_intervals: empty decision range");
  auto tree = detail::find_intervals_tree(shape, val, j_lo, j_hi, i_lo, i_hi);
  std::vector<DecisionTriple> flat(static_cast<std::size_t>(tree->count));
  detail::flatten_interval_tree(tree.get(), flat);
  return DecisionIntervals(detail::merge_adjacent(std::move(flat)), i_lo, i_hi);
}

// CostModel front-end; E[j] must be finalized for j in [j_lo, j_hi].
DecisionIntervals find_intervals(const CostModel& model, std::span<const Cost> e,
                                 Index j_lo, Index j_hi, Index i_lo, Index i_hi);

// Concave-case merge of the pre-round structure b_old (decisions <= now) with
// b_new from the latest frontier (decisions in (now, cordon)). Both must cover
// the same state range. Finds the cutting point p: states up to p take b_new's
// decisions, the rest keep b_old's.
DecisionIntervals merge_decisions(const CostModel& model, std::span<const Cost> e,
                                  const DecisionIntervals& b_old,
                                  const DecisionIntervals& b_new);

namespace detail {

DecisionIntervals concat_clipped(const DecisionIntervals& head, Index head_hi,
                                 const DecisionIntervals& tail, Index lo, Index hi);

// Cutting-point merge shared by the concave public op and the GAP structures
// (which also need the convex orientation: there new decisions win a suffix).
template <class Val>
DecisionIntervals merge_decisions_fn(Shape shape, const Val& val,
                                     const DecisionIntervals& b_old,
                                     const DecisionIntervals& b_new) {
  if (b_old.cover_lo() != b_new.cover_lo() || b_old.cover_hi() != b_new.cover_hi()) {
    throw std::invalid_argument("merge_decisions: coverage mismatch");
  }
  if (b_new.empty()) return b_old;
  const Index lo = b_new.cover_lo(), hi = b_new.cover_hi();
  const Index nk = b_new.size();
  auto beats = [&](Index ja, Index jb, Index x) { return val(ja, x) < val(jb, x); };

  if (shape == Shape::Concave) {
    // new decisions win a prefix [lo, p]
    std::vector<char> wins(static_cast<std::size_t>(nk));
    parallel_for(0, nk, [&](Index t) {
      const auto& tr = b_new.triple(t);
      wins[static_cast<std::size_t>(t)] = beats(tr.decision, b_old.lookup(tr.lo), tr.lo);
    });
    Index k = -1;  // last winning new triple
    {
      Index a = 0, b = nk - 1;
      while (a <= b) {
        const Index m = a + (b - a) / 2;
        if (wins[static_cast<std::size_t>(m)]) {
          k = m;
          a = m + 1;
        } else {
          b = m - 1;
        }
      }
    }
    if (k < 0) return b_old;
    const Index jk = b_new.triple(k).decision;
    // first old triple beaten into: old decision wins at its right endpoint
    Index t = -1;
    {
      Index a = 0, b = b_old.size() - 1;
      while (a <= b) {
        const Index m = a + (b - a) / 2;
        if (beats(b_old.triple(m).decision, jk, b_old.triple(m).hi)) {
          t = m;
          b = m - 1;
        } else {
          a = m + 1;
        }
      }
    }
    if (t < 0) return b_new;  // new dominates through hi
    const Index jt = b_old.triple(t).decision;
    // last p with the new decision still winning
    Index p = b_new.triple(k).lo - 1;
    {
      Index a = b_new.triple(k).lo, b = b_old.triple(t).hi;
      while (a <= b) {
        const Index m = a + (b - a) / 2;
        if (beats(jk, jt, m)) {
          p = m;
          a = m + 1;
        } else {
          b = m - 1;
        }
      }
    }
    if (p < lo) return b_old;
    if (p >= hi) return b_new;
    return concat_clipped(b_new, p, b_old, lo, hi);
  }

  // Convex orientation: new decisions win a suffix (q, hi].
  std::vector<char> wins(static_cast<std::size_t>(nk));
  parallel_for(0, nk, [&](Index t2) {
    const auto& tr = b_new.triple(t2);
    wins[static_cast<std::size_t>(t2)] = beats(tr.decision, b_old.lookup(tr.hi), tr.hi);
  });
  Index k = nk;  // first winning new triple
  {
    Index a = 0, b = nk - 1;
    while (a <= b) {
      const Index m = a + (b - a) / 2;
      if (wins[static_cast<std::size_t>(m)]) {
        k = m;
        b = m - 1;
      } else {
        a = m + 1;
      }
    }
  }
  if (k >= nk) return b_old;
  const Index jk = b_new.triple(k).decision;
  // last old triple that still wins at its left endpoint
  Index t = b_old.size();
  {
    Index a = 0, b = b_old.size() - 1;
    while (a <= b) {
      const Index m = a + (b - a) / 2;
      if (beats(b_old.triple(m).decision, jk, b_old.triple(m).lo)) {
        t = m;
        a = m + 1;
      } else {
        b = m - 1;
      }
    }
  }
  if (t >= b_old.size()) return b_new;
  const Index jt = b_old.triple(t).decision;
  // first state where the new decision wins
  Index q = b_new.triple(k).hi + 1;
  {
    Index a = b_old.triple(t).lo, b = b_new.triple(k).hi;
    while (a <= b) {
      const Index m = a + (b - a) / 2;
      if (beats(jk, jt, m)) {
        q = m;
        b = m - 1;
      } else {
        a = m + 1;
      }
    }
  }
  if (q > hi) return b_old;
  if (q <= lo) return b_new;
  return concat_clipped(b_old, q - 1, b_new, lo, hi);
}

}  // namespace detail

struct RowMinimum {
  Index col = -1;
  Cost value = kInf;

  friend bool operator==(const RowMinimum&, const RowMinimum&) = default;
};

// Per-row minima of a totally monotone rows x cols matrix by midpoint divide
// and conquer; smallest-column tie-break. Convex: argmins non-decreasing by
// row; concave: non-increasing. O(cols log rows) evaluations.
template <class Eval>
void monotone_minima_rec(Index r_lo, Index r_hi, Index c_lo, Index c_hi,
                         const Eval& eval, Shape shape, std::vector<RowMinimum>& out) {
  if (r_lo > r_hi) return;
  const Index r_m = r_lo + (r_hi - r_lo) / 2;
  Index c_best = c_lo;
  Cost v_best = eval(r_m, c_lo);
  for (Index c = c_lo + 1; c <= c_hi; ++c) {
    const Cost v = eval(r_m, c);
    if (v < v_best) {
      v_best = v;
      c_best = c;
    }
  }
  out[static_cast<std::size_t>(r_m)] = {c_best, v_best};
  const bool par = (r_hi - r_lo + 1) > detail::kMonotoneMinimaSeqRows;
  auto go = [&](Index rl, Index rh, Index cl, Index ch) {
    monotone_minima_rec(rl, rh, cl, ch, eval, shape, out);
  };
  if (shape == Shape::Convex) {
    if (par) {
      par_do([&] { go(r_lo, r_m - 1, c_lo, c_best); },
             [&] { go(r_m + 1, r_hi, c_best, c_hi); });
    } else {
      go(r_lo, r_m - 1, c_lo, c_best);
      go(r_m + 1, r_hi, c_best, c_hi);
    }
  } else {
    if (par) {
      par_do([&] { go(r_lo, r_m - 1, c_best, c_hi); },
             [&] { go(r_m + 1, r_hi, c_lo, c_best); });
    } else {
      go(r_lo, r_m - 1, c_best, c_hi);
      go(r_m + 1, r_hi, c_lo, c_best);
    }
  }
}

template <class Eval>
std::vector<RowMinimum> monotone_minima(Index rows, Index cols, const Eval& eval,
                                        Shape shape) {
  if (rows <= 0 || cols <= 0) return {};
  std::vector<RowMinimum> out(static_cast<std::size_t>(rows));
  monotone_minima_rec(0, rows - 1, 0, cols - 1, eval, shape, out);
  return out;
}

}  // namespace dpdp
