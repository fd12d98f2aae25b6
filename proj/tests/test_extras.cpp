#include <doctest.h>

#include <random>
#include <stdexcept>

#include "dpdp/extras.hpp"
#include "dpdp/oracle.hpp"
#include "dpdp/parallel.hpp"
#include "helpers.hpp"

using namespace dpdp;

namespace {

std::vector<Cost> random_weights(Index n, std::uint64_t seed, Cost range = 100) {
  std::mt19937_64 rng(seed);
  std::vector<Cost> w(static_cast<std::size_t>(n));
  for (auto& x : w) x = static_cast<Cost>(rng() % static_cast<std::uint64_t>(range));
  return w;
}

}  // namespace

TEST_CASE("k_glws trivial partitions") {
  const CostModel quad = make_post_office_cost({1, 2, 3, 4}, 0, CostVariant::SquaredLength);
  // k = n with positive costs: all singletons
  {
    const CostModel quad_c = make_post_office_cost({1, 2, 3, 4}, 5, CostVariant::SquaredLength);
    const KGlwsResult r = k_glws(quad_c, 4, 4);
    CHECK(r.cost == 4 * (1 + 5));
    CHECK(r.rounds == 4);
  }
  // k = 1: one cluster
  {
    const KGlwsResult r = k_glws(quad, 4, 1);
    CHECK(r.cost == quad.w(0, 4));
    CHECK(r.rounds == 1);
  }
  // the derived split example: n=4, k=2 -> 2^2 + 2^2 = 8
  {
    const KGlwsResult r = k_glws(quad, 4, 2);
    CHECK(r.cost == 8);
    CHECK(r.cost == oracle::brute_kglws(quad, 4, 2));
  }
}

TEST_CASE("k_glws boundary table invariants") {
  const CostModel quad = make_post_office_cost({1, 2, 3, 4, 5}, 3, CostVariant::SquaredLength);
  const KGlwsResult r = k_glws(quad, 5, 3);
  CHECK(r.at(0, 0) == 0);
  for (Index i = 1; i <= 5; ++i) CHECK(is_inf(r.at(i, 0)));
  CHECK(r.rounds == 3);
}

TEST_CASE("k_glws rejects bad arguments and handles k > n") {
  const CostModel quad = make_post_office_cost({1, 2, 3}, 0, CostVariant::SquaredLength);
  CHECK_THROWS_AS(k_glws(quad, 3, 0), std::invalid_argument);
  const CostModel sq = make_post_office_cost({1, 2, 3}, 0, CostVariant::SqrtLength);
  CHECK_THROWS_AS(k_glws(sq, 3, 2), std::invalid_argument);
  const KGlwsResult r = k_glws(quad, 3, 5);
  CHECK(is_inf(r.cost));
  CHECK(r.d.empty());
  CHECK(r.rounds == 0);
}

TEST_CASE("k_glws equals the brute oracle with k rounds") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const Index n = 1 + static_cast<Index>(seed % 48);
    const Index k = 1 + static_cast<Index>(seed % static_cast<std::uint64_t>(n));
    const CostModel m = test::random_model(Shape::Convex, n, seed + 9000);
    const KGlwsResult r = k_glws(m, n, k);
    CAPTURE(seed);
    CHECK(r.cost == oracle::brute_kglws(m, n, k));
    CHECK(r.rounds == k);
  }
}

TEST_CASE("obst single key and two equal keys") {
  {
    const ObstResult r = obst(std::vector<Cost>{7}, ObstWeights::Frequencies, false);
    CHECK(r.cost == 7);
    CHECK(r.best_at(1, 1) == 1);
  }
  {
    // symmetric pair: smallest-root tie-break fixes best = 1
    const ObstResult r = obst(std::vector<Cost>{5, 5}, ObstWeights::Frequencies, false);
    CHECK(r.cost == 15);  // root + one child access
    CHECK(r.best_at(1, 2) == 1);
  }
  {
    // leaf+gap convention for a single key: a_0 + a_1 + a_2
    const ObstResult r = obst(std::vector<Cost>{1, 7, 2}, ObstWeights::LeafGap, false);
    CHECK(r.cost == 10);
  }
}

TEST_CASE("obst edge cases") {
  CHECK(obst(std::vector<Cost>{}, ObstWeights::Frequencies, false).cost == 0);
  CHECK_THROWS_AS(obst(std::vector<Cost>{1, -2, 3}, ObstWeights::Frequencies, false),
                  std::invalid_argument);
  CHECK_THROWS_AS(obst(std::vector<Cost>{1, 2}, ObstWeights::LeafGap, false),
                  std::invalid_argument);
}

TEST_CASE("obst equals the cubic oracle under both conventions") {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const Index n = 1 + static_cast<Index>(seed % 40);
    {
      const std::vector<Cost> w = random_weights(n, seed);
      const ObstResult r = obst(w, ObstWeights::Frequencies, seed % 2 == 0);
      CHECK(r.cost == oracle::brute_obst(w, ObstWeights::Frequencies));
    }
    {
      const std::vector<Cost> w = random_weights(2 * n + 1, seed ^ 0x11);
      const ObstResult r = obst(w, ObstWeights::LeafGap, seed % 2 == 1);
      CHECK(r.cost == oracle::brute_obst(w, ObstWeights::LeafGap));
    }
  }
}

TEST_CASE("obst root choices are monotone across the table") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Index n = 2 + static_cast<Index>(seed % 50);
    const std::vector<Cost> w = random_weights(n, seed + 77);
    const ObstResult r = obst(w, ObstWeights::Frequencies, true);
    for (Index i = 1; i <= n; ++i) {
      for (Index j = i; j <= n; ++j) {
        if (j > i) {
          CHECK(r.best_at(i, j - 1) <= r.best_at(i, j));
          CHECK(r.best_at(i, j) <= r.best_at(i + 1, j));
        }
        CHECK(r.best_at(i, j) >= i);
        CHECK(r.best_at(i, j) <= j);
      }
    }
  }
}

TEST_CASE("obst parallel and sequential tables are bit-identical") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const std::vector<Cost> w = random_weights(64, seed * 13 + 1);
    set_num_workers(2);
    const ObstResult par = obst(w, ObstWeights::Frequencies, true);
    set_num_workers(0);
    const ObstResult seq = obst(w, ObstWeights::Frequencies, false);
    CHECK(par.d == seq.d);
    CHECK(par.best == seq.best);
    CHECK(par.cost == seq.cost);
  }
}

TEST_CASE("k_glws rolling memory note: full table is kept") {
  // the (n+1) x (k+1) layout is part of the contract
  const CostModel quad = make_post_office_cost({2, 4, 6, 8}, 2, CostVariant::SquaredLength);
  const KGlwsResult r = k_glws(quad, 4, 2);
  CHECK(r.d.size() == static_cast<std::size_t>(5 * 3));
  CHECK(r.best_at(4, 2) >= 1);
}
