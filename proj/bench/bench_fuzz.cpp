#include <benchmark/benchmark.h>

#include "sixsplit/certify/fuzz.hpp"

namespace {

using sixsplit::certify::Sampler;

void BM_FuzzParallel(benchmark::State& state) {
  const auto sampler = static_cast<Sampler>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sixsplit::certify::fuzz_campaign(state.range(0), 42, sampler));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_FuzzSerial(benchmark::State& state) {
  const auto sampler = static_cast<Sampler>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sixsplit::certify::fuzz_campaign_serial(state.range(0), 42, sampler));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

const auto kArgs = {static_cast<long>(Sampler::Uniform), static_cast<long>(Sampler::NearDegenerate)};

BENCHMARK(BM_FuzzParallel)->ArgsProduct({{1000, 10000}, kArgs})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_FuzzSerial)->ArgsProduct({{1000, 10000}, kArgs})->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
