#include "dpdp/decisions.hpp"

#include <algorithm>
#include <stdexcept>

namespace dpdp {

DecisionIntervals::DecisionIntervals(std::vector<DecisionTriple> triples, Index lo, Index hi)
    : triples_(std::move(triples)), lo_(lo), hi_(hi) {
  if (lo_ > hi_) {
    if (!triples_.empty()) throw std::invalid_argument("DecisionIntervals: triples in empty coverage");
    return;
  }
  Index expect = lo_;
  for (const auto& t : triples_) {
    if (t.lo != expect || t.hi < t.lo) {
      throw std::invalid_argument("DecisionIntervals: triples must exactly tile the coverage");
    }
    expect = t.hi + 1;
  }
  if (expect != hi_ + 1) {
    throw std::invalid_argument("DecisionIntervals: triples must exactly tile the coverage");
  }
  triples_ = detail::merge_adjacent(std::move(triples_));
}

DecisionIntervals DecisionIntervals::single(Index lo, Index hi, Index decision) {
  if (lo > hi) return {};
  return DecisionIntervals({{lo, hi, decision}}, lo, hi);
}

Index DecisionIntervals::lookup(Index i) const {
  if (i < lo_ || i > hi_) throw std::out_of_range("DecisionIntervals::lookup: state outside coverage");
  auto it = std::upper_bound(triples_.begin(), triples_.end(), i,
                             [](Index x, const DecisionTriple& t) { return x < t.lo; });
  return std::prev(it)->decision;
}

DecisionIntervals DecisionIntervals::clipped(Index lo, Index hi) const {
  lo = std::max(lo, lo_);
  hi = std::min(hi, hi_);
  if (lo > hi) return {};
  std::vector<DecisionTriple> out;
  auto it = std::upper_bound(triples_.begin(), triples_.end(), lo,
                             [](Index x, const DecisionTriple& t) { return x < t.lo; });
  for (auto t = std::prev(it); t != triples_.end() && t->lo <= hi; ++t) {
    out.push_back({std::max(t->lo, lo), std::min(t->hi, hi), t->decision});
  }
  return DecisionIntervals(std::move(out), lo, hi);
}

namespace detail {

void flatten_interval_tree(const IntervalNode* node, std::span<DecisionTriple> out) {
  if (node == nullptr) return;
  if (node->is_run) {
    std::copy(node->run.begin(), node->run.end(), out.begin());
    return;
  }
  const Index nl = node->left ? node->left->count : 0;
  out[static_cast<std::size_t>(nl)] = node->mid;
  auto left = out.subspan(0, static_cast<std::size_t>(nl));
  auto right = out.subspan(static_cast<std::size_t>(nl) + 1);
  if (node->count > kFindIntervalsSeqStates) {
    par_do([&] { flatten_interval_tree(node->left.get(), left); },
           [&] { flatten_interval_tree(node->right.get(), right); });
  } else {
    flatten_interval_tree(node->left.get(), left);
    flatten_interval_tree(node->right.get(), right);
  }
}

std::vector<DecisionTriple> merge_adjacent(std::vector<DecisionTriple> triples) {
  std::size_t w = 0;
  for (std::size_t r = 0; r < triples.size(); ++r) {
    if (w > 0 && triples[w - 1].decision == triples[r].decision) {
      triples[w - 1].hi = triples[r].hi;
    } else {
      triples[w++] = triples[r];
    }
  }
  triples.resize(w);
  return triples;
}

DecisionIntervals concat_clipped(const DecisionIntervals& head, Index head_hi,
                                 const DecisionIntervals& tail, Index lo, Index hi) {
  DecisionIntervals a = head.clipped(lo, head_hi);
  DecisionIntervals b = tail.clipped(head_hi + 1, hi);
  std::vector<DecisionTriple> out;
  out.reserve(static_cast<std::size_t>(a.size() + b.size()));
  out.insert(out.end(), a.triples().begin(), a.triples().end());
  out.insert(out.end(), b.triples().begin(), b.triples().end());
  return DecisionIntervals(std::move(out), lo, hi);
}

}  // namespace detail

DecisionIntervals find_intervals(const CostModel& model, std::span<const Cost> e,
                                 Index j_lo, Index j_hi, Index i_lo, Index i_hi) {
  if (model.shape() == Shape::Convex && i_lo <= i_hi && i_lo <= j_hi) {
    throw std::invalid_argument("find_intervals: convex shape requires i_lo > j_hi");
  }
  auto val = [&model, e](Index j, Index i) {
    return add_cost(e[static_cast<std::size_t>(j)], model.w(j, i));
  };
  return find_intervals_fn(model.shape(), val, j_lo, j_hi, i_lo, i_hi);
}

DecisionIntervals merge_decisions(const CostModel& model, std::span<const Cost> e,
                                  const DecisionIntervals& b_old,
                                  const DecisionIntervals& b_new) {
  if (model.shape() != Shape::Concave) {
    throw std::invalid_argument("merge_decisions: concave shape required");
  }
  auto val = [&model, e](Index j, Index i) {
    return add_cost(e[static_cast<std::size_t>(j)], model.w(j, i));
  };
  return detail::merge_decisions_fn(Shape::Concave, val, b_old, b_new);
}

}  // namespace dpdp
