#include <benchmark/benchmark.h>

#include "dpdp/generate.hpp"
#include "dpdp/parallel.hpp"
#include "dpdp/sequence.hpp"

namespace {

std::vector<dpdp::Index> permutation_keys(dpdp::Index n) {
  const dpdp::InstanceFile f = dpdp::gen_lis(n, 7);
  std::vector<dpdp::Index> keys;
  keys.reserve(f.pairs.size());
  for (const auto& [i, j] : f.pairs) keys.push_back(static_cast<dpdp::Index>(j));
  return keys;
}

void BM_Lis(benchmark::State& state) {
  dpdp::set_num_workers(static_cast<int>(state.range(1)));
  const auto keys = permutation_keys(static_cast<dpdp::Index>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(dpdp::lis<dpdp::Index>(keys));
  }
  dpdp::set_num_workers(0);
}
BENCHMARK(BM_Lis)->Args({1 << 16, 1})->Args({1 << 16, 2})->Args({1 << 20, 2})->Unit(benchmark::kMillisecond);

void BM_SparseLcs(benchmark::State& state) {
  dpdp::set_num_workers(static_cast<int>(state.range(1)));
  const dpdp::InstanceFile f = dpdp::gen_match_list(static_cast<dpdp::Index>(state.range(0)), 1000, 3);
  dpdp::MatchList m;
  m.pairs.reserve(f.pairs.size());
  for (const auto& [i, j] : f.pairs) {
    m.pairs.push_back({static_cast<dpdp::Index>(i), static_cast<dpdp::Index>(j)});
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(dpdp::sparse_lcs(m));
  }
  dpdp::set_num_workers(0);
}
BENCHMARK(BM_SparseLcs)->Args({1 << 18, 1})->Args({1 << 18, 2})->Unit(benchmark::kMillisecond);

}  // namespace
