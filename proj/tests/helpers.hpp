#pragma once

#include <random>
#include <vector>

#include "dpdp/cost.hpp"
#include "dpdp/types.hpp"

namespace dpdp::test {

// Sorted strictly-increasing integral positions.
inline std::vector<Cost> random_positions(Index n, std::uint64_t seed, Cost span_per = 8) {
  std::mt19937_64 rng(seed);
  std::vector<Cost> xs(static_cast<std::size_t>(n));
  for (auto& x : xs) x = static_cast<Cost>(rng() % static_cast<std::uint64_t>(std::max<Index>(n, 1) * span_per));
  std::sort(xs.begin(), xs.end());
  for (std::size_t i = 0; i < xs.size(); ++i) xs[i] += static_cast<Cost>(i);
  return xs;
}

inline std::vector<Cost> random_offsets(Index n, std::uint64_t seed, Cost magnitude = 64) {
  std::mt19937_64 rng(seed);
  std::vector<Cost> off(static_cast<std::size_t>(n) + 1);
  for (auto& o : off) o = static_cast<Cost>(rng() % static_cast<std::uint64_t>(magnitude));
  return off;
}

struct ModelSpec {
  CostVariant variant;
  Cost c;
  bool offsets;
};

// A varied pool of valid convex/concave models for randomized suites.
inline CostModel random_model(Shape shape, Index n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Cost c = static_cast<Cost>(rng() % 6 == 0 ? 0 : rng() % 200);
  CostModel base;
  if (shape == Shape::Convex) {
    const CostVariant v = rng() % 2 == 0 ? CostVariant::SquaredLength : CostVariant::MedianDistance;
    base = make_post_office_cost(random_positions(n, seed ^ 0xabcd), c, v);
  } else {
    base = make_post_office_cost(random_positions(n, seed ^ 0xabcd), c, CostVariant::SqrtLength);
  }
  if (rng() % 4 != 0) {
    return with_offsets(base, random_offsets(n, seed ^ 0x77, 1 + static_cast<Cost>(rng() % 256)));
  }
  return base;
}

}  // namespace dpdp::test
