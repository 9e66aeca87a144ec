#include <benchmark/benchmark.h>

#include "laminations/exterior.hpp"
#include "laminations/family.hpp"

using namespace laminations;

namespace {

// Half-dimensional wedge power of a model chart form: the workload behind
// the exterior-algebra cross-checks.
void BM_wedge_power_top(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  CoordModel m = build(g, n);
  const int half = m.dim() / 2;
  for (auto _ : state) {
    Rational top = top_coefficient(wedge_power(m.form, half));
    benchmark::DoNotOptimize(top);
  }
}
BENCHMARK(BM_wedge_power_top)
    ->Args({0, 7})   // dim 8
    ->Args({1, 5})   // dim 10
    ->Args({3, 0})   // dim 12
    ->Args({2, 4});  // dim 14

void BM_box_cube(benchmark::State& state) {
  const int i = static_cast<int>(state.range(0));
  CoordModel context = build(2 + i, 0);
  for (auto _ : state) {
    bool ok = box_cube_check(i, context);
    benchmark::DoNotOptimize(ok);
  }
}
BENCHMARK(BM_box_cube)->Arg(1)->Arg(2);

}  // namespace

BENCHMARK_MAIN();
