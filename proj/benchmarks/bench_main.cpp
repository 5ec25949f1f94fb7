#include <benchmark/benchmark.h>

#include "annv/export.hpp"
#include "annv/log_derivative.hpp"
#include "annv/residual.hpp"
#include "annv/scenario.hpp"

namespace {

void BM_Fields(benchmark::State& state) {
  const annv::TauFunction tau = annv::builtin("strong1").tau();
  double x = -3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(annv::fields(tau, x, 1.5, -2.0));
    x += 1e-3;
  }
}
BENCHMARK(BM_Fields);

void BM_LogPartialOrder5(benchmark::State& state) {
  const annv::TauFunction tau = annv::builtin("weak1").tau();
  for (auto _ : state) {
    benchmark::DoNotOptimize(annv::log_partial_uncached(tau, {3, 1, 1}, 0.4, -1.2, 0.7));
  }
}
BENCHMARK(BM_LogPartialOrder5);

void BM_ResidualAt(benchmark::State& state) {
  const annv::TauFunction tau = annv::builtin("weak2").tau();
  for (auto _ : state) benchmark::DoNotOptimize(annv::residual_at(tau, 0.4, -1.2, 0.7));
}
BENCHMARK(BM_ResidualAt);

// One figure panel: 301 x 301 points.
void BM_FieldGrid(benchmark::State& state) {
  const annv::TauFunction tau = annv::builtin("weak1").tau();
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(annv::field_grid(tau, {-60, 60, -60, 60}, 5, 301, threads));
  }
}
BENCHMARK(BM_FieldGrid)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
