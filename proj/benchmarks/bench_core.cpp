#include <benchmark/benchmark.h>

#include "whitdim/formulas.hpp"
#include "whitdim/lattice.hpp"
#include "whitdim/verify.hpp"

namespace {

void BM_CountLambdaFin(benchmark::State& state) {
  auto p = whitdim::canonicalize(4, 8, state.range(0), state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(whitdim::count_lambda_fin(p));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(whitdim::pow_big(p.n, p.r)));
}
BENCHMARK(BM_CountLambdaFin)->Args({3, 10})->Args({4, 10})->Args({5, 10})->Args({6, 10});

void BM_LatticeScan(benchmark::State& state) {
  auto p = whitdim::canonicalize(4, 8, state.range(0), state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(whitdim::scan_lattice(p));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(whitdim::pow_big(p.n, p.r)));
}
BENCHMARK(BM_LatticeScan)->Args({3, 10})->Args({4, 10})->Args({5, 10});

void BM_ClosedForms(benchmark::State& state) {
  std::int64_t n = state.range(0);
  for (auto _ : state) {
    for (std::int64_t c = 0; c < n; ++c) {
      for (std::int64_t d = 0; d < n; ++d) {
        auto p = whitdim::canonicalize(c, d, 4, n);
        benchmark::DoNotOptimize(whitdim::s_cochar_closed_v1(p));
        benchmark::DoNotOptimize(whitdim::s_cochar_closed_v2(p));
        benchmark::DoNotOptimize(whitdim::m_prime_closed(p));
      }
    }
  }
  state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_ClosedForms)->Arg(12)->Arg(60)->Arg(360);

void BM_Sweep(benchmark::State& state) {
  whitdim::SweepConfig cfg;
  cfg.n_max = 8;
  cfg.r_max = 3;
  cfg.parallelism = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(whitdim::run_sweep(cfg));
  }
}
BENCHMARK(BM_Sweep)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
