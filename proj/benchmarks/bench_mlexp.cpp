#include <benchmark/benchmark.h>

#include "mlexp/exp_repr.hpp"
#include "mlexp/frac_ops.hpp"
#include "mlexp/series.hpp"
#include "mlexp/special.hpp"

using namespace mlexp;

static void BM_gamma(benchmark::State& state) {
  double z = 0.37;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mlexp::gamma(z));
  }
}
BENCHMARK(BM_gamma);

static void BM_h_series(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(h_series(2.0, {1.0, 0.0}, n).value);
  }
}
BENCHMARK(BM_h_series)->Arg(1)->Arg(2)->Arg(5);

static void BM_h_via_decomposition(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(h_via_decomposition(2.0, {1.0, 0.0}, n).value);
  }
}
BENCHMARK(BM_h_via_decomposition)->Arg(2)->Arg(5);

static void BM_h_exp(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(h_exp(2.0, 0.05, {1.0, 0.0}, n).value);
  }
}
BENCHMARK(BM_h_exp)->Arg(2)->Arg(5);

static void BM_sequential_deriv(benchmark::State& state) {
  const RationalOrder order{2, 3};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        sequential_deriv(2.0, {1.5, 0.0}, order).value);
  }
}
BENCHMARK(BM_sequential_deriv);

static void BM_rl_integral_quadrature(benchmark::State& state) {
  const int panels = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        rl_integral_quadrature(0.5, {1.0, 0.0}, 0.5, 2.0, panels));
  }
}
BENCHMARK(BM_rl_integral_quadrature)->Arg(16)->Arg(256);

BENCHMARK_MAIN();
