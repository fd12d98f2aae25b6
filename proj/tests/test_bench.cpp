#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <random>

#include "dpdp/bench.hpp"
#include "dpdp/generate.hpp"
#include "dpdp/instance_io.hpp"
#include "dpdp/sequence.hpp"

using namespace dpdp;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("dpdp_test_" + std::to_string(std::random_device{}()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("instance files round-trip byte-identically") {
  TempDir tmp;
  std::mt19937_64 rng(1);

  const InstanceFile coords = gen_glws(257, "uniform", 5);
  const auto p1 = tmp.path / "c.bin";
  write_instance(p1, coords);
  const InstanceFile coords2 = read_instance(p1);
  CHECK(encode_instance(coords) == encode_instance(coords2));
  CHECK(coords2.kind == PayloadKind::Coordinates);
  CHECK(coords2.coords == coords.coords);

  const InstanceFile seq = gen_sequence(100, 7, 2);
  CHECK(encode_instance(decode_instance(encode_instance(seq))) == encode_instance(seq));

  const InstanceFile pairs = gen_lis(64, 3);
  CHECK(encode_instance(decode_instance(encode_instance(pairs))) == encode_instance(pairs));
}

TEST_CASE("instance decoding rejects malformed input") {
  const InstanceFile seq = gen_sequence(10, 3, 1);
  auto data = encode_instance(seq);
  auto bad_magic = data;
  bad_magic[0] = 'X';
  CHECK_THROWS_AS(decode_instance(bad_magic), std::invalid_argument);
  auto truncated = data;
  truncated.pop_back();
  CHECK_THROWS_AS(decode_instance(truncated), std::invalid_argument);
  auto trailing = data;
  trailing.push_back(0);
  CHECK_THROWS_AS(decode_instance(trailing), std::invalid_argument);
  // unsorted coordinates
  InstanceFile coords;
  coords.kind = PayloadKind::Coordinates;
  coords.coords = {3.0, 1.0};
  CHECK_THROWS_AS(encode_instance(coords), std::invalid_argument);
}

TEST_CASE("gen is deterministic per seed") {
  CHECK(encode_instance(gen_glws(10, "uniform", 1)) == encode_instance(gen_glws(10, "uniform", 1)));
  CHECK(encode_instance(gen_glws(10, "uniform", 1)) != encode_instance(gen_glws(10, "uniform", 2)));
  CHECK(encode_instance(gen_lis(32, 9)) == encode_instance(gen_lis(32, 9)));
  CHECK_THROWS_AS(gen_glws(10, "gaussian", 1), std::invalid_argument);
}

TEST_CASE("unit alphabet makes every pair match") {
  const auto [a, b] = gen_lcs(20, 15, 1, 4);
  CHECK(build_match_list(a.bytes, b.bytes).size() == 20 * 15);
}

TEST_CASE("matchlist generator bounds the LCS length") {
  const InstanceFile f = gen_match_list(5000, 16, 11);
  MatchList m;
  for (const auto& [i, j] : f.pairs) m.pairs.push_back({static_cast<Index>(i), static_cast<Index>(j)});
  const SparseLcsResult r = sparse_lcs(m);
  CHECK(r.k <= 16);
  CHECK(r.k >= 1);
}

TEST_CASE("csv schema golden file") {
  CHECK(std::string(BenchRecord::csv_header()) ==
        "algo,n,m,k_out,rounds,wasted_states,threads,seed,cost_spec,time_ms");
  BenchRecord rec;
  rec.algo = "glws-par";
  rec.n = 100;
  rec.m = 0;
  rec.k_out = 7;
  rec.rounds = 7;
  rec.wasted_states = 12;
  rec.threads = 2;
  rec.seed = 42;
  rec.cost_spec = "quad:C=10";
  rec.time_ms = 1.5;
  CHECK(rec.csv_row() == "glws-par,100,0,7,7,12,2,42,quad:C=10,1.5");
}

TEST_CASE("run_bench verifies parallel against sequential") {
  RunOptions opt;
  opt.algo = "glws-par";
  opt.cost = "quad:C=25";
  opt.verify = true;
  opt.repeats = 2;
  const RunOutcome out = run_bench(opt, {gen_glws(500, "uniform", 3)});
  CHECK(out.verify == "pass");
  CHECK(out.record.n == 500);
  CHECK(out.record.rounds > 0);
  CHECK(out.record.k_out > 0);
  CHECK(out.record.time_ms >= 0.0);
}

TEST_CASE("run_bench rejects mismatched instance kinds") {
  RunOptions opt;
  opt.algo = "glws-par";
  CHECK_THROWS_AS(run_bench(opt, {gen_sequence(10, 2, 1)}), std::invalid_argument);
  opt.algo = "gap";
  CHECK_THROWS_AS(run_bench(opt, {gen_glws(10, "uniform", 1)}), std::invalid_argument);
  opt.algo = "nope";
  CHECK_THROWS_AS(run_bench(opt, {gen_glws(10, "uniform", 1)}), std::invalid_argument);
}

TEST_CASE("run_bench covers lis lcs gap and extras") {
  {
    RunOptions opt;
    opt.algo = "lis";
    opt.verify = true;
    const RunOutcome out = run_bench(opt, {gen_lis(1000, 5)});
    CHECK(out.verify == "pass");
    CHECK(out.record.rounds == out.record.k_out);
  }
  {
    RunOptions opt;
    opt.algo = "lcs";
    opt.verify = true;
    const auto [a, b] = gen_lcs(300, 300, 4, 6);
    const RunOutcome out = run_bench(opt, {a, b});
    CHECK(out.verify == "pass");
  }
  {
    RunOptions opt;
    opt.algo = "gap";
    opt.cost = "quad:C=4";
    opt.cost2 = "quad:C=4";
    opt.verify = true;
    const auto [a, b] = gen_lcs(24, 20, 3, 7);
    const RunOutcome out = run_bench(opt, {a, b});
    CHECK(out.verify == "pass");
    CHECK(out.record.rounds > 0);
  }
  {
    RunOptions opt;
    opt.algo = "kglws";
    opt.cost = "quad:C=2";
    opt.k = 4;
    opt.verify = true;
    const RunOutcome out = run_bench(opt, {gen_glws(64, "uniform", 8)});
    CHECK(out.verify == "pass");
    CHECK(out.record.rounds == 4);
  }
  {
    RunOptions opt;
    opt.algo = "obst";
    opt.verify = true;
    const RunOutcome out = run_bench(opt, {gen_glws(48, "uniform", 9)});
    CHECK(out.verify == "pass");
  }
}

TEST_CASE("selftest passes and reports cleanly") {
  TempDir tmp;
  const SelfTestReport report = selftest(tmp.path);
  CHECK(report.ok);
  CHECK(report.message.empty());
  CHECK(report.artifacts.empty());
}
