#include <doctest.h>

#include <random>

#include "dpdp/oracle.hpp"
#include "dpdp/parallel.hpp"
#include "dpdp/sequence.hpp"

using namespace dpdp;

namespace {

std::vector<std::uint8_t> bytes(const char* s) {
  return {reinterpret_cast<const std::uint8_t*>(s),
          reinterpret_cast<const std::uint8_t*>(s) + std::string_view(s).size()};
}

std::vector<Index> random_keys(Index n, std::uint64_t seed, std::uint64_t range) {
  std::mt19937_64 rng(seed);
  std::vector<Index> keys(static_cast<std::size_t>(n));
  for (auto& k : keys) k = static_cast<Index>(rng() % range);
  return keys;
}

// one extraction round the slow way: prefix-min records over live keys
std::vector<Index> naive_prefix_min_round(const std::vector<Index>& keys, std::vector<bool>& live) {
  std::vector<Index> out;
  Cost run = kInf;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (!live[i]) continue;
    if (keys[i] <= run) {
      out.push_back(static_cast<Index>(i));
      live[i] = false;
    }
    run = std::min(run, static_cast<Cost>(keys[i]));
  }
  return out;
}

}  // namespace

TEST_CASE("tournament tree extraction matches the definition scan") {
  const std::vector<Index> keys{5, 3, 4, 1, 2};
  TournamentTree<Index> tree(keys);
  CHECK(tree.live_count() == 5);
  CHECK(tree.extract_prefix_min_records() == std::vector<Index>{0, 1, 3});
  CHECK(tree.audit());
  CHECK(tree.extract_prefix_min_records() == std::vector<Index>{2, 4});
  CHECK(tree.extract_prefix_min_records().empty());
  CHECK(tree.live_count() == 0);
  CHECK(tree.audit());
}

TEST_CASE("tournament tree rounds partition all indices") {
  const Index n = 10'000;
  std::vector<Index> keys = random_keys(n, 9, 1 << 20);
  TournamentTree<Index> tree(keys);
  std::vector<bool> live(static_cast<std::size_t>(n), true);
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  while (tree.live_count() > 0) {
    const std::vector<Index> got = tree.extract_prefix_min_records();
    const std::vector<Index> want = naive_prefix_min_round(keys, live);
    REQUIRE(got == want);
    for (Index i : got) {
      CHECK_FALSE(seen[static_cast<std::size_t>(i)]);
      seen[static_cast<std::size_t>(i)] = true;
    }
    CHECK(tree.audit());
  }
  for (std::size_t i = 0; i < seen.size(); ++i) CHECK(seen[i]);
}

TEST_CASE("lis trivial sequences") {
  std::vector<Index> inc{1, 2, 3, 4, 5, 6, 7};
  CHECK(lis<Index>(inc).k == 7);
  std::vector<Index> dec{7, 6, 5, 4, 3, 2, 1};
  const LisResult r = lis<Index>(dec);
  CHECK(r.k == 1);
  CHECK(r.round_of == std::vector<Index>(7, 1));
  CHECK(lis<Index>(std::vector<Index>{}).k == 0);
}

TEST_CASE("lis is strict: equal elements share a round") {
  std::vector<Index> eq{4, 4, 4};
  const LisResult r = lis<Index>(eq);
  CHECK(r.k == 1);
}

TEST_CASE("lis equals both oracles on random permutations") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 120; ++trial) {
    const Index n = 1 + static_cast<Index>(rng() % 400);
    std::vector<Index> keys(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) keys[static_cast<std::size_t>(i)] = i;
    for (Index i = n - 1; i > 0; --i) {
      std::swap(keys[static_cast<std::size_t>(i)], keys[rng() % static_cast<std::uint64_t>(i + 1)]);
    }
    const LisResult r = lis<Index>(keys);
    const oracle::BruteLis ref = oracle::brute_lis<Index>(keys);
    CHECK(r.k == ref.k);
    CHECK(r.round_of == ref.dp);
    CHECK(r.k == oracle::patience_lis<Index>(keys));
  }
}

TEST_CASE("build_match_list frozen example and edge cases") {
  const MatchList m = build_match_list(bytes("abcb"), bytes("bca"));
  const std::vector<MatchPair> want{{1, 3}, {2, 1}, {3, 2}, {4, 1}};
  CHECK(m.pairs == want);

  CHECK(build_match_list(bytes("abc"), bytes("xyz")).pairs.empty());

  const MatchList diag = build_match_list(bytes("abcd"), bytes("abcd"));
  CHECK(diag.size() == 4);
  for (Index t = 0; t < 4; ++t) CHECK(diag.pairs[static_cast<std::size_t>(t)] == MatchPair{t + 1, t + 1});
}

TEST_CASE("match list sort order holds with duplicates") {
  const MatchList m = build_match_list(bytes("aa"), bytes("aa"));
  const std::vector<MatchPair> want{{1, 2}, {1, 1}, {2, 2}, {2, 1}};
  CHECK(m.pairs == want);
}

TEST_CASE("sparse_lcs frozen example") {
  const SparseLcsResult r = sparse_lcs(build_match_list(bytes("abcb"), bytes("bca")));
  CHECK(r.k == 2);  // LCS "bc"
  CHECK(oracle::brute_lcs(bytes("abcb"), bytes("bca")) == 2);
  REQUIRE(r.cordon_trace.size() == 2);
  CHECK(r.cordon_trace[0] == std::vector<Index>{0, 1, 3});
  CHECK(r.cordon_trace[1] == std::vector<Index>{2});
}

TEST_CASE("sparse_lcs trivial cases") {
  CHECK(sparse_lcs(MatchList{}).k == 0);
  const MatchList diag = build_match_list(bytes("abcdef"), bytes("abcdef"));
  const SparseLcsResult r = sparse_lcs(diag);
  CHECK(r.k == 6);
  CHECK(r.cordon_trace.size() == 6);  // one diagonal pair per round
}

TEST_CASE("sparse_lcs equals the dense oracle on random strings") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 150; ++trial) {
    const Index n = 1 + static_cast<Index>(rng() % 200);
    const Index m = 1 + static_cast<Index>(rng() % 200);
    std::vector<std::uint8_t> a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(m));
    for (auto& x : a) x = static_cast<std::uint8_t>('a' + rng() % 4);
    for (auto& x : b) x = static_cast<std::uint8_t>('a' + rng() % 4);
    const MatchList ml = build_match_list(a, b);
    const SparseLcsResult r = sparse_lcs(ml);
    CAPTURE(trial);
    CHECK(r.k == oracle::brute_lcs(a, b));
    // the documented LCS -> LIS mapping: strict LIS over the j sequence
    std::vector<Index> js;
    for (const auto& p : ml.pairs) js.push_back(p.j);
    CHECK(r.k == oracle::patience_lis<Index>(js));
  }
}

TEST_CASE("sequence results are thread-count independent") {
  std::mt19937_64 rng(55);
  std::vector<std::uint8_t> a(300), b(280);
  for (auto& x : a) x = static_cast<std::uint8_t>('a' + rng() % 3);
  for (auto& x : b) x = static_cast<std::uint8_t>('a' + rng() % 3);
  const MatchList ml = build_match_list(a, b);
  std::vector<Index> keys = random_keys(5000, 6, 512);

  set_num_workers(1);
  const SparseLcsResult l1 = sparse_lcs(ml);
  const LisResult r1 = lis<Index>(keys);
  set_num_workers(2);
  const SparseLcsResult l2 = sparse_lcs(ml);
  const LisResult r2 = lis<Index>(keys);
  set_num_workers(0);
  CHECK(l1.k == l2.k);
  CHECK(l1.cordon_trace == l2.cordon_trace);
  CHECK(r1.k == r2.k);
  CHECK(r1.round_of == r2.round_of);
}

TEST_CASE("generic match list builder agrees with the byte builder") {
  const std::vector<Index> a{9, 5, 7, 5}, b{5, 7, 9};
  const MatchList m = build_match_list_of<Index>(a, b);
  const std::vector<MatchPair> want{{1, 3}, {2, 1}, {3, 2}, {4, 1}};
  CHECK(m.pairs == want);
}
