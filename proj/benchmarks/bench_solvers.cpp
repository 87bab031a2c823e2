#include <benchmark/benchmark.h>

#include "toyscatter/toyscatter.hpp"

namespace {

using toyscatter::Instance;
using toyscatter::Rational;
using toyscatter::SpeedList;

// k distinct speeds 1..k against k copies of 3/2.
Instance ramp(std::size_t k) {
  SpeedList a;
  for (std::size_t i = 1; i <= k; ++i) a.emplace_back(static_cast<long>(i));
  return Instance(a, SpeedList(k, Rational::parse("3/2")));
}

void BM_Recursive(benchmark::State& state) {
  const Instance inst = ramp(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(toyscatter::p_a_wins_recursive(inst));
}
BENCHMARK(BM_Recursive)->RangeMultiplier(2)->Range(4, 64);

void BM_Distinct(benchmark::State& state) {
  const Instance inst = ramp(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(toyscatter::p_a_wins_distinct(inst));
}
BENCHMARK(BM_Distinct)->RangeMultiplier(2)->Range(4, 64);

void BM_Series(benchmark::State& state) {
  const auto g = toyscatter::group(ramp(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(toyscatter::p_a_wins_series(g));
}
BENCHMARK(BM_Series)->RangeMultiplier(2)->Range(4, 64);

void BM_EqualSpeedClosedForm(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(toyscatter::s_equal_speed(k, k));
}
BENCHMARK(BM_EqualSpeedClosedForm)->RangeMultiplier(4)->Range(4, 1024);

void BM_MonteCarlo(benchmark::State& state) {
  const Instance inst = ramp(8);
  const toyscatter::SimConfig cfg{.trials = static_cast<std::uint64_t>(state.range(0)), .seed = 1};
  for (auto _ : state) benchmark::DoNotOptimize(toyscatter::simulate(inst, cfg));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MonteCarlo)->Arg(10000)->Arg(100000);

void BM_Hypervolume(benchmark::State& state) {
  const Instance inst = ramp(8);
  for (auto _ : state) {
    benchmark::DoNotOptimize(toyscatter::estimate_volume(inst, static_cast<std::uint64_t>(state.range(0)), 1));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Hypervolume)->Arg(100000);

}  // namespace

BENCHMARK_MAIN();
