#include <benchmark/benchmark.h>

#include "laminations/builtins.hpp"
#include "laminations/measures.hpp"

using namespace laminations;

namespace {

void BM_build(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) {
    CoordModel m = build(g, n);
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(BM_build)->Args({0, 8})->Args({3, 0})->Args({2, 3});

void BM_model_report(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  CoordModel m = build(g, n);
  for (auto _ : state) {
    RatioReport r = model_report(m);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_model_report)->Args({2, 1})->Args({3, 2})->Args({4, 0});

void BM_sweep(benchmark::State& state) {
  const int max = static_cast<int>(state.range(0));
  for (auto _ : state) {
    SweepResult s = sweep(max);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_sweep)->Arg(4)->Arg(6);

void BM_track_ratio(benchmark::State& state) {
  TrainTrack t = builtin_track("sigma04-tau");
  for (auto _ : state) {
    RatioReport r = track_report(t, t.name);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_track_ratio);

}  // namespace

BENCHMARK_MAIN();
