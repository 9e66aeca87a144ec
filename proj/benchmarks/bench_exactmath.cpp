#include <benchmark/benchmark.h>

#include <random>

#include "laminations/exactmath.hpp"

using namespace laminations;

namespace {

long rnd(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

RatMatrix seeded_skew(int n, unsigned long seed) {
  std::mt19937_64 rng(seed);
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Rational v(Integer(rnd(rng, -9, 9)), Integer(rnd(rng, 0, 1) ? 1 : 2));
      m.at(i, j) = v;
      m.at(j, i) = -v;
    }
  return m;
}

IntMatrix seeded_int(int rows, int cols, unsigned long seed) {
  std::mt19937_64 rng(seed);
  IntMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = rnd(rng, -9, 9);
  return m;
}

void BM_pfaffian(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  RatMatrix m = seeded_skew(n, 0x9e1f0000 + static_cast<unsigned long>(n));
  for (auto _ : state) {
    Rational pf = pfaffian(m);
    benchmark::DoNotOptimize(pf);
  }
}
BENCHMARK(BM_pfaffian)->Arg(8)->Arg(12)->Arg(16)->Arg(20);

void BM_integer_kernel(benchmark::State& state) {
  const int cols = static_cast<int>(state.range(0));
  IntMatrix m = seeded_int(cols / 2, cols, 0x9e1f1000 + static_cast<unsigned long>(cols));
  for (auto _ : state) {
    IntMatrix k = integer_kernel(m);
    benchmark::DoNotOptimize(k);
  }
}
BENCHMARK(BM_integer_kernel)->Arg(8)->Arg(12)->Arg(16);

void BM_invariant_factors(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  IntMatrix m = seeded_int(n, n, 0x9e1f2000 + static_cast<unsigned long>(n));
  for (auto _ : state) {
    std::vector<Integer> f = invariant_factors(m);
    benchmark::DoNotOptimize(f);
  }
}
BENCHMARK(BM_invariant_factors)->Arg(6)->Arg(8)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
