// Serial vs OpenMP mode sums. Results are bitwise identical; only time differs.

#include <benchmark/benchmark.h>

#include "eulerdiff/kernels.hpp"
#include "eulerdiff/pfd.hpp"
#include "eulerdiff/spectral.hpp"
#include "eulerdiff/zeta.hpp"

using namespace eulerdiff;

namespace {

Execution mode(const benchmark::State& state) {
  return state.range(1) == 0 ? Execution::Serial : Execution::Parallel;
}

void label(benchmark::State& state) {
  state.SetLabel(state.range(1) == 0 ? "serial" : "parallel/" + std::to_string(kernels::max_threads()));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SpectralSolve(benchmark::State& state) {
  const auto g = Polynomial::parse("x^4 - 2*x^2 + x");
  SpectralConfig cfg;
  cfg.truncation_order = state.range(0);
  cfg.execution = mode(state);
  for (auto _ : state) benchmark::DoNotOptimize(spectral_solve(g, cfg));
  label(state);
}

void BM_PfdEval(benchmark::State& state) {
  const std::complex<double> z{0.5, 0.5};
  for (auto _ : state) benchmark::DoNotOptimize(pfd_eval(z, state.range(0), mode(state)));
  label(state);
}

void BM_ModePowerSum(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(mode_power_sum(-4, state.range(0), mode(state)));
  label(state);
}

void BM_CoefficientTables(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(coefficient_tables(6, state.range(0), mode(state)));
  label(state);
}

}  // namespace

BENCHMARK(BM_SpectralSolve)->ArgsProduct({{1000, 10000}, {0, 1}});
BENCHMARK(BM_PfdEval)->ArgsProduct({{10000, 100000, 1000000}, {0, 1}});
BENCHMARK(BM_ModePowerSum)->ArgsProduct({{10000, 100000, 1000000}, {0, 1}});
BENCHMARK(BM_CoefficientTables)->ArgsProduct({{10000, 100000}, {0, 1}});

BENCHMARK_MAIN();
