#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "hedgesim/assertion.hpp"
#include "hedgesim/game.hpp"
#include "hedgesim/hedging.hpp"
#include "hedgesim/worlds.hpp"

using namespace hedgesim;

static void BM_HedgeSequence(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hedge_sequence(n));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_HedgeSequence)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

static void BM_ThresholdSweep(benchmark::State& state) {
  const auto grid = interior_grid(static_cast<std::size_t>(state.range(0)));
  const auto threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(threshold_sweep(grid, grid, 0.5, threads));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}
BENCHMARK(BM_ThresholdSweep)->Args({99, 1})->Args({99, 0})->Args({499, 1})->Args({499, 0})->UseRealTime();

static void BM_PoolStates(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto agents = static_cast<std::size_t>(state.range(1));
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> pick(1, n);
  std::vector<SoritesSeries::Flip> flips;
  for (std::size_t i = 0; i < agents; ++i) flips.push_back({"a" + std::to_string(i), pick(rng)});
  const SoritesSeries series = build_forced_march(n, flips);
  for (auto _ : state) benchmark::DoNotOptimize(pool_states(series));
}
BENCHMARK(BM_PoolStates)->Args({100, 2})->Args({1000, 8})->Args({10000, 32});

static void BM_CommonBelief(benchmark::State& state) {
  const PooledModel p = canonical_model();
  const WorldSet target = p.all_not_q();
  const WorldSet live = p.model.all_worlds();
  for (auto _ : state) benchmark::DoNotOptimize(common_belief(p.model, target, live));
}
BENCHMARK(BM_CommonBelief);
BENCHMARK_MAIN();
