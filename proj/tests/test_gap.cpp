#include <doctest.h>

#include <functional>
#include <random>

#include "dpdp/gap.hpp"
#include "dpdp/glws.hpp"
#include "dpdp/oracle.hpp"
#include "dpdp/parallel.hpp"
#include "helpers.hpp"

using namespace dpdp;

namespace {

std::vector<std::uint8_t> random_bytes(Index n, std::uint64_t seed, int alphabet) {
  std::mt19937_64 rng(seed);
  std::vector<std::uint8_t> out(static_cast<std::size_t>(n));
  for (auto& x : out) x = static_cast<std::uint8_t>('a' + rng() % static_cast<std::uint64_t>(alphabet));
  return out;
}

CostModel interval_cost(Index n, bool concave, Cost c, std::uint64_t seed) {
  return make_post_office_cost(test::random_positions(n, seed), c,
                               concave ? CostVariant::SqrtLength : CostVariant::SquaredLength);
}

GapInstance random_instance(Index n, Index m, bool concave, std::uint64_t seed, int alphabet = 3) {
  return make_gap_instance(random_bytes(n, seed, alphabet), random_bytes(m, seed ^ 0xf00d, alphabet),
                           interval_cost(n, concave, 2 + static_cast<Cost>(seed % 5), seed * 3 + 1),
                           interval_cost(m, concave, 1 + static_cast<Cost>(seed % 4), seed * 7 + 2));
}

// independent memoized recursion, cross-checking the triple-loop oracle
Cost gap_memo(const GapInstance& inst, Index i, Index j, std::vector<Cost>& memo,
              std::vector<char>& done) {
  const std::size_t at = static_cast<std::size_t>(i * (inst.m() + 1) + j);
  if (done[at]) return memo[at];
  done[at] = 1;
  Cost v = (i == 0 && j == 0) ? 0 : kInf;
  for (Index ip = 0; ip < i; ++ip) {
    v = std::min(v, add_cost(gap_memo(inst, ip, j, memo, done), inst.w1.w(ip, i)));
  }
  for (Index jp = 0; jp < j; ++jp) {
    v = std::min(v, add_cost(gap_memo(inst, i, jp, memo, done), inst.w2.w(jp, j)));
  }
  if (i > 0 && j > 0 && inst.a[static_cast<std::size_t>(i - 1)] == inst.b[static_cast<std::size_t>(j - 1)]) {
    v = std::min(v, gap_memo(inst, i - 1, j - 1, memo, done));
  }
  memo[at] = v;
  return v;
}

}  // namespace

TEST_CASE("two naive gap implementations agree") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const GapInstance inst = random_instance(16, 16, seed % 2 == 1, seed);
    const std::vector<Cost> table = oracle::brute_gap(inst);
    std::vector<Cost> memo(table.size(), 0);
    std::vector<char> done(table.size(), 0);
    for (Index i = 0; i <= inst.n(); ++i) {
      for (Index j = 0; j <= inst.m(); ++j) {
        CHECK(gap_memo(inst, i, j, memo, done) ==
              table[static_cast<std::size_t>(i * (inst.m() + 1) + j)]);
      }
    }
  }
}

TEST_CASE("empty B string collapses to one GLWS") {
  for (const bool concave : {false, true}) {
    const Index n = 40;
    const CostModel w1 = interval_cost(n, concave, 3, 17);
    const CostModel w2 = interval_cost(0, concave, 1, 18);
    const GapInstance inst = make_gap_instance(random_bytes(n, 4, 3), {}, w1, w2);
    const GapResult r = gap_solve(inst);
    const GlwsSolution ref = glws_seq(w1, n, 0);
    for (Index i = 0; i <= n; ++i) {
      CHECK(r.at(i, 0) == ref.dp[static_cast<std::size_t>(i)]);
    }
    // dimensional collapse: the effective depth is the 1D one
    CHECK(gap_effective_depth(inst, r) == effective_depth_glws(ref.best));
    CHECK(r.stats.rounds == gap_effective_depth(inst, r));
  }
}

TEST_CASE("identical strings align for free") {
  const std::vector<std::uint8_t> s{'a', 'b', 'c', 'd', 'e'};
  const GapInstance inst = make_gap_instance(s, s, interval_cost(5, false, 7, 3),
                                             interval_cost(5, false, 7, 4));
  const GapResult r = gap_solve(inst);
  CHECK(r.answer() == 0);
}

TEST_CASE("boundary-only instance") {
  const GapInstance inst = make_gap_instance({}, {}, interval_cost(0, false, 1, 5),
                                             interval_cost(0, false, 1, 6));
  const GapResult r = gap_solve(inst);
  CHECK(r.answer() == 0);
  CHECK(r.stats.rounds == 0);
}

TEST_CASE("gap_solve equals the triple-loop oracle exactly") {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const bool concave = seed % 2 == 1;
    const Index n = 1 + static_cast<Index>(seed % 24);
    const Index m = 1 + static_cast<Index>((seed * 5) % 24);
    const GapInstance inst = random_instance(n, m, concave, seed);
    const GapResult r = gap_solve(inst);
    CAPTURE(seed);
    CAPTURE(n);
    CAPTURE(m);
    CHECK(r.d == oracle::brute_gap(inst));
    CHECK(r.stats.rounds == gap_effective_depth(inst, r));
    CHECK(r.stats.total_finalized() == (n + 1) * (m + 1) - 1);
  }
}

TEST_CASE("mixed-shape deletion costs work together") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Index n = 10, m = 8;
    const GapInstance inst = make_gap_instance(
        random_bytes(n, seed, 2), random_bytes(m, seed ^ 0xaa, 2),
        interval_cost(n, seed % 2 == 0, 2, seed + 40), interval_cost(m, seed % 2 == 1, 3, seed + 80));
    const GapResult r = gap_solve(inst);
    CHECK(r.d == oracle::brute_gap(inst));
    CHECK(r.stats.rounds == gap_effective_depth(inst, r));
  }
}

TEST_CASE("m greater than n swaps internally and transposes back") {
  const Index n = 6, m = 14;
  const GapInstance inst = random_instance(n, m, false, 99);
  const GapResult r = gap_solve(inst);
  CHECK(r.n == n);
  CHECK(r.m == m);
  CHECK(r.d == oracle::brute_gap(inst));
  CHECK(r.stats.rounds == gap_effective_depth(inst, r));
}

TEST_CASE("round count equals effective depth on larger instances") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const GapInstance inst = random_instance(64, 64, seed % 2 == 1, seed + 500);
    const GapResult r = gap_solve(inst);
    CHECK(r.stats.rounds == gap_effective_depth(inst, r));
    CHECK(r.d == oracle::brute_gap(inst));
  }
}

TEST_CASE("gap determinism across thread counts") {
  const GapInstance inst = random_instance(48, 40, false, 7);
  set_num_workers(1);
  const GapResult r1 = gap_solve(inst);
  set_num_workers(2);
  const GapResult r2 = gap_solve(inst);
  set_num_workers(0);
  CHECK(r1.d == r2.d);
  CHECK(r1.stats.rounds == r2.stats.rounds);
  CHECK(r1.stats.frontier_sizes == r2.stats.frontier_sizes);
}

TEST_CASE("gap_effective_depth validates its inputs") {
  const GapInstance inst = random_instance(4, 4, false, 1);
  GapResult r = gap_solve(inst);
  GapResult broken = r;
  broken.best_p[10] = 9;  // out of range
  CHECK_THROWS_AS(gap_effective_depth(inst, broken), std::invalid_argument);
  GapResult tiny = r;
  tiny.best_p.pop_back();
  CHECK_THROWS_AS(gap_effective_depth(inst, tiny), std::invalid_argument);
}

TEST_CASE("misdeclared gap shapes are rejected at construction") {
  const Index n = 20;
  const CostModel sq = interval_cost(n, false, 2, 3);
  const CostModel lying(Shape::Concave, n, [sq](Index j, Index i) { return sq.w(j, i); });
  CHECK_THROWS_AS(make_gap_instance(random_bytes(n, 1, 2), random_bytes(n, 2, 2), lying,
                                    interval_cost(n, false, 1, 4)),
                  std::invalid_argument);
}
