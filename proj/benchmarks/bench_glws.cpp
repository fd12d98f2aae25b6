#include <benchmark/benchmark.h>

#include "dpdp/cost.hpp"
#include "dpdp/generate.hpp"
#include "dpdp/glws.hpp"
#include "dpdp/oracle.hpp"
#include "dpdp/parallel.hpp"

namespace {

dpdp::CostModel quad_model(dpdp::Index n, dpdp::Cost c) {
  const dpdp::InstanceFile f = dpdp::gen_glws(n, "uniform", 42);
  std::vector<dpdp::Cost> pos(f.coords.begin(), f.coords.end());
  return dpdp::make_post_office_cost(std::move(pos), c, dpdp::CostVariant::SquaredLength);
}

void BM_GlwsSeq(benchmark::State& state) {
  const auto n = static_cast<dpdp::Index>(state.range(0));
  const dpdp::CostModel m = quad_model(n, 10'000);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dpdp::glws_seq(m, n, 0));
  }
}
BENCHMARK(BM_GlwsSeq)->Arg(1 << 14)->Arg(1 << 17)->Arg(1 << 20)->Unit(benchmark::kMillisecond);

void BM_GlwsPar(benchmark::State& state) {
  const auto n = static_cast<dpdp::Index>(state.range(0));
  dpdp::set_num_workers(static_cast<int>(state.range(1)));
  const dpdp::CostModel m = quad_model(n, 10'000);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dpdp::glws_par(m, n, 0));
  }
  dpdp::set_num_workers(0);
}
BENCHMARK(BM_GlwsPar)
    ->Args({1 << 17, 1})
    ->Args({1 << 17, 2})
    ->Args({1 << 20, 1})
    ->Args({1 << 20, 2})
    ->Unit(benchmark::kMillisecond);

void BM_GlwsBrute(benchmark::State& state) {
  const auto n = static_cast<dpdp::Index>(state.range(0));
  const dpdp::CostModel m = quad_model(n, 100);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dpdp::oracle::brute_glws(m, n, 0));
  }
}
BENCHMARK(BM_GlwsBrute)->Arg(1 << 10)->Arg(1 << 12)->Unit(benchmark::kMillisecond);

}  // namespace
