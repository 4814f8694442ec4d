#include <benchmark/benchmark.h>

#include "wdc/campaign.hpp"

namespace {

wdc::FuzzPolicy policy_for(const benchmark::State& state) {
  wdc::FuzzPolicy policy;
  policy.count = static_cast<std::size_t>(state.range(0));
  return policy;
}

void BM_CampaignSerial(benchmark::State& state) {
  const wdc::FuzzPolicy policy = policy_for(state);
  for (auto _ : state) benchmark::DoNotOptimize(wdc::run_campaign_serial(policy));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_CampaignParallel(benchmark::State& state) {
  const wdc::FuzzPolicy policy = policy_for(state);
  for (auto _ : state) benchmark::DoNotOptimize(wdc::run_campaign_parallel(policy));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_CampaignSerial)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CampaignParallel)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
