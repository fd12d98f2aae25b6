#pragma once

#include <bit>
#include <span>
#include <vector>

#include "dpdp/parallel.hpp"
#include "dpdp/types.hpp"

namespace dpdp {

// Static binary min-tree over a key sequence. Leaves are tombstoned on
// removal, never rebalanced; every internal node holds the min over its live
// leaves. Supports batched extraction of prefix-min records: the live leaves
// whose key is <= the minimum of all earlier live leaves (ties included).
template <class Key>
class TournamentTree {
 public:
  explicit TournamentTree(std::span<const Key> keys)
      : n_(static_cast<Index>(keys.size())), live_count_(n_) {
    cap_ = static_cast<Index>(std::bit_ceil(static_cast<std::uint64_t>(std::max<Index>(n_, 1))));
    nodes_.assign(static_cast<std::size_t>(2 * cap_), Node{});
    for (Index i = 0; i < n_; ++i) {
      nodes_[static_cast<std::size_t>(cap_ + i)] = {keys[static_cast<std::size_t>(i)], true};
    }
    for (Index u = cap_ - 1; u >= 1; --u) pull(u);
  }

  Index size() const { return n_; }
  Index live_count() const { return live_count_; }
  bool live(Index i) const { return nodes_[static_cast<std::size_t>(cap_ + i)].any; }
  const Key& key(Index i) const { return nodes_[static_cast<std::size_t>(cap_ + i)].min; }

  // Removes and returns, in index order, every prefix-min record among the
  // live leaves. Work O(l log(L/l)) for l records via pruned descent.
  std::vector<Index> extract_prefix_min_records() {
    if (live_count_ == 0) return {};
    std::vector<Index> out = extract(1, cap_, Bound{});
    live_count_ -= static_cast<Index>(out.size());
    return out;
  }

  // Full consistency audit: every node equals the min over its live leaves.
  bool audit() const {
    for (Index u = cap_ - 1; u >= 1; --u) {
      Node want = combine(nodes_[static_cast<std::size_t>(2 * u)],
                          nodes_[static_cast<std::size_t>(2 * u + 1)]);
      const Node& have = nodes_[static_cast<std::size_t>(u)];
      if (want.any != have.any) return false;
      if (want.any && want.min != have.min) return false;
    }
    return true;
  }

 private:
  struct Node {
    Key min{};
    bool any = false;  // any live leaf below
  };

  struct Bound {
    Key v{};
    bool has = false;  // min over earlier live leaves, if any

    bool admits(const Key& k) const { return !has || !(v < k); }  // k <= v
    Bound with(const Node& node) const {
      if (!node.any) return *this;
      if (!has || node.min < v) return {node.min, true};
      return *this;
    }
  };

  static Node combine(const Node& a, const Node& b) {
    if (!a.any) return b;
    if (!b.any) return a;
    return {b.min < a.min ? b.min : a.min, true};
  }

  void pull(Index u) {
    nodes_[static_cast<std::size_t>(u)] =
        combine(nodes_[static_cast<std::size_t>(2 * u)], nodes_[static_cast<std::size_t>(2 * u + 1)]);
  }

  std::vector<Index> extract(Index u, Index width, Bound bound) {
    Node& node = nodes_[static_cast<std::size_t>(u)];
    if (!node.any || !bound.admits(node.min)) return {};
    if (width == 1) {
      node = Node{};  // tombstone
      return {u - cap_};
    }
    // the right child's bound uses the left child's pre-extraction min
    const Bound right_bound = bound.with(nodes_[static_cast<std::size_t>(2 * u)]);
    std::vector<Index> left, right;
    if (width > kSeqWidth) {
      par_do([&] { left = extract(2 * u, width / 2, bound); },
             [&] { right = extract(2 * u + 1, width / 2, right_bound); });
    } else {
      left = extract(2 * u, width / 2, bound);
      right = extract(2 * u + 1, width / 2, right_bound);
    }
    pull(u);
    left.insert(left.end(), right.begin(), right.end());
    return left;
  }

  static constexpr Index kSeqWidth = 2048;

  Index n_ = 0;
  Index cap_ = 1;
  Index live_count_ = 0;
  std::vector<Node> nodes_;  // 1-based heap layout, leaves at cap_ + i
};

}  // namespace dpdp
