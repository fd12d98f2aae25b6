#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "dpdp/types.hpp"

namespace dpdp {

enum class Shape { Convex, Concave };

const char* to_string(Shape s);

// Evaluator bundle for D[i] = min_{0<=j<i} E[j] + w(j,i) with E[j] = f(D[j], j).
//
// w must be O(1) and referentially transparent: the solvers re-evaluate it
// freely. f must be non-decreasing in its first argument (tentative DP values
// only ever shrink toward the truth, and sentinels placed from stale values
// stay valid only under that assumption). Identity f is the default.
// Evaluators are shared across threads with no interior mutation.
class CostModel {
 public:
  using WFn = std::function<Cost(Index, Index)>;
  using EFn = std::function<Cost(Cost, Index)>;

  CostModel() = default;
  CostModel(Shape shape, Index n, WFn w, EFn f = {});

  Shape shape() const { return shape_; }
  Index size() const { return n_; }

  // Cost of the transition j -> i; defined for 0 <= j < i <= n.
  Cost w(Index j, Index i) const { return w_(j, i); }

  // E[j] = f(D[j], j).
  Cost e(Cost d, Index j) const { return f_ ? f_(d, j) : d; }

  bool has_custom_f() const { return static_cast<bool>(f_); }

 private:
  Shape shape_ = Shape::Convex;
  Index n_ = 0;
  WFn w_;
  EFn f_;
};

// Wraps `base` with E[j] = D[j] + offsets[j]; offsets has size n+1.
// Keeps the declared shape (E never enters the Monge condition).
CostModel with_offsets(const CostModel& base, std::vector<Cost> offsets);

enum class CostVariant { MedianDistance, SquaredLength, SqrtLength };

// Post-office cost over sorted village coordinates, O(1) per evaluation via
// prefix sums:
//   MedianDistance: C + sum_{v=j+1..i} |x_v - x_med|   (lower median)
//   SquaredLength:  C + (i-j)^2
//   SqrtLength:     C*(i-j) + floor(K*sqrt(i-j))        (precomputed table)
class PrefixSumCost {
 public:
  PrefixSumCost(std::vector<Cost> positions, Cost fixed_cost, CostVariant variant,
                Cost sqrt_scale = Cost{1} << 20);

  Cost w(Index j, Index i) const;  // villages j+1..i; requires 0 <= j < i <= n
  Shape shape() const;
  Index size() const { return static_cast<Index>(positions_.size()); }
  CostVariant variant() const { return variant_; }

 private:
  std::vector<Cost> positions_;   // 1-based in w(); strictly sorted
  std::vector<Cost> prefix_;      // prefix_[i] = positions_[0..i-1] summed
  std::vector<Cost> sqrt_table_;  // SqrtLength only: g[L] = floor(K*sqrt(L))
  Cost fixed_cost_ = 0;
  CostVariant variant_ = CostVariant::SquaredLength;
};

// Builds a CostModel view over a PrefixSumCost (E[j] = D[j] unless the caller
// wraps it afterwards). Shape: Convex for MedianDistance/SquaredLength,
// Concave for SqrtLength. Throws std::invalid_argument on unsorted positions.
CostModel make_post_office_cost(std::vector<Cost> positions, Cost fixed_cost,
                                CostVariant variant, Cost sqrt_scale = Cost{1} << 20);

struct MongeCheckResult {
  bool ok = true;
  std::array<Index, 4> counterexample{};  // a < b < c < d, valid when !ok
};

// Samples random quadruples a<b<c<d in [0,n] and checks the declared Monge
// condition of w: convex requires w(a,c)+w(b,d) <= w(b,c)+w(a,d), concave the
// reverse. n < 4 is vacuously ok.
MongeCheckResult monge_check(const CostModel& model, Index samples, std::uint64_t seed);

// Every quadruple; feasible for n <= 30 or so.
MongeCheckResult monge_check_exhaustive(const CostModel& model);

// Parses CLI cost descriptors: "quad:C=10", "median:C=5", "sqrt:C=0,K=1048576".
// The positions are only consulted by the median variant but always define n.
CostModel parse_cost_spec(const std::string& spec, std::vector<Cost> positions);

}  // namespace dpdp
