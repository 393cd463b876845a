// Serial reference vs OpenMP kernels. Arg 0 = serial, 1 = parallel.
#include <benchmark/benchmark.h>

#include "charvar/batch.hpp"
#include "charvar/explore.hpp"

using namespace charvar;

namespace {

Exec policy(const benchmark::State& state) { return state.range(0) ? Exec::Parallel : Exec::Serial; }

void BM_IdentityBattery(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(identity_battery(7, 500, false, policy(state)));
  state.SetItemsProcessed(state.iterations() * 500);
}

void BM_SoundnessSweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(soundness_sweep(kAllComponents, 10, 7, policy(state)));
  state.SetItemsProcessed(state.iterations() * 100);
}

void BM_Explore(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(explore_solve(3.0, 7, 40, policy(state)));
  state.SetItemsProcessed(state.iterations() * 40);
}

}  // namespace

BENCHMARK(BM_IdentityBattery)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SoundnessSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Explore)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
