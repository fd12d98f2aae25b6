#include <doctest.h>

#include <stdexcept>

#include "dpdp/cost.hpp"
#include "helpers.hpp"

using namespace dpdp;

TEST_CASE("post-office median cost on three points") {
  // positions [1,2,3], C = 0: serving all three from the median costs 2
  const CostModel m = make_post_office_cost({1, 2, 3}, 0, CostVariant::MedianDistance);
  CHECK(m.w(0, 3) == 2);
  CHECK(m.shape() == Shape::Convex);
  CHECK(m.w(0, 1) == 0);
  CHECK(m.w(1, 3) == 1);  // lower median of {2,3} is 2
}

TEST_CASE("quadratic interval cost") {
  const CostModel m = make_post_office_cost({1, 2, 3, 4, 5, 6}, 10, CostVariant::SquaredLength);
  CHECK(m.w(3, 6) == 19);
  CHECK(m.w(0, 6) == 46);
  CHECK(m.shape() == Shape::Convex);
}

TEST_CASE("sqrt table cost is concave and exact") {
  const CostModel m = make_post_office_cost(test::random_positions(8, 3), 0, CostVariant::SqrtLength, 1);
  CHECK(m.shape() == Shape::Concave);
  CHECK(m.w(0, 8) == 2);  // floor(sqrt(8))
  CHECK(m.w(0, 4) == 2);
  CHECK(m.w(4, 8) == 2);
}

TEST_CASE("empty cluster query is rejected") {
  const CostModel m = make_post_office_cost({1, 2, 3}, 0, CostVariant::MedianDistance);
  CHECK_THROWS_AS(m.w(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(m.w(2, 1), std::invalid_argument);
}

TEST_CASE("unsorted positions are rejected") {
  CHECK_THROWS_AS(make_post_office_cost({3, 1, 2}, 0, CostVariant::MedianDistance),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_post_office_cost({1, 1, 2}, 0, CostVariant::MedianDistance),
                  std::invalid_argument);
}

TEST_CASE("monge check accepts and rejects by declared shape") {
  const CostModel quad = make_post_office_cost(test::random_positions(16, 1), 0, CostVariant::SquaredLength);
  // (0,1,2,3): 4+4 <= 1+9
  CHECK(quad.w(0, 2) + quad.w(1, 3) <= quad.w(1, 2) + quad.w(0, 3));
  CHECK(monge_check(quad, 20000, 42).ok);

  // the same quadratic cost declared concave must be refuted
  const CostModel lying(Shape::Concave, 16, [&](Index j, Index i) { return quad.w(j, i); });
  const auto refuted = monge_check(lying, 20000, 42);
  CHECK_FALSE(refuted.ok);
  const auto [a, b, c, d] = refuted.counterexample;
  CHECK(a < b);
  CHECK(b < c);
  CHECK(c < d);
}

TEST_CASE("monge check is vacuous below four states") {
  const CostModel tiny = make_post_office_cost({5, 9}, 0, CostVariant::MedianDistance);
  CHECK(monge_check(tiny, 1000, 1).ok);
}

TEST_CASE("exhaustive monge check over every built-in family") {
  for (Index n : {4, 9, 17, 30}) {
    for (const auto variant :
         {CostVariant::MedianDistance, CostVariant::SquaredLength, CostVariant::SqrtLength}) {
      for (Cost c : {Cost{0}, Cost{7}}) {
        const CostModel m = make_post_office_cost(test::random_positions(n, 100 + n), c, variant);
        CAPTURE(n);
        CAPTURE(c);
        CHECK(monge_check_exhaustive(m).ok);
      }
    }
  }
}

TEST_CASE("sqrt table stays concave through the acceptance sizes") {
  // increments of floor(K*sqrt(L)) must be non-increasing; checked as the
  // interval-length form of the concave Monge condition
  const Index n = 4096;
  const CostModel m = make_post_office_cost(test::random_positions(n, 5), 0, CostVariant::SqrtLength);
  Cost prev = m.w(0, 1);
  for (Index len = 2; len <= n; ++len) {
    const Cost g = m.w(0, len);
    const Cost g1 = m.w(0, len - 1);
    CHECK(g - g1 <= prev);
    prev = g - g1;
  }
}

TEST_CASE("cost spec parsing") {
  auto pos = test::random_positions(8, 2);
  const CostModel q = parse_cost_spec("quad:C=10", pos);
  CHECK(q.w(0, 2) == 14);
  const CostModel med = parse_cost_spec("median:C=5", pos);
  CHECK(med.shape() == Shape::Convex);
  const CostModel sq = parse_cost_spec("sqrt:C=0,K=1048576", pos);
  CHECK(sq.shape() == Shape::Concave);
  CHECK(sq.w(0, 4) == 2097152);  // 2^20 * sqrt(4)
  CHECK_THROWS_AS(parse_cost_spec("cubic:C=1", pos), std::invalid_argument);
  CHECK_THROWS_AS(parse_cost_spec("quad:Z=1", pos), std::invalid_argument);
}

TEST_CASE("evaluators are referentially transparent") {
  const CostModel m = test::random_model(Shape::Convex, 32, 9);
  for (Index j = 0; j < 32; ++j) {
    for (Index i = j + 1; i <= 32; ++i) {
      CHECK(m.w(j, i) == m.w(j, i));
    }
  }
}

TEST_CASE("offset wrapper shifts E and keeps the shape") {
  const CostModel base = make_post_office_cost({1, 2, 3, 4}, 1, CostVariant::SquaredLength);
  std::vector<Cost> off{5, 6, 7, 8, 9};
  const CostModel m = with_offsets(base, off);
  CHECK(m.shape() == base.shape());
  CHECK(m.e(100, 2) == 107);
  CHECK(m.e(kInf, 2) == kInf);
  CHECK(base.e(100, 2) == 100);  // identity by default
  CHECK_THROWS_AS(with_offsets(base, std::vector<Cost>{1, 2}), std::invalid_argument);
}
