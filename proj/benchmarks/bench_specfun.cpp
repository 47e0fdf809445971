#include <benchmark/benchmark.h>

#include "fdde/specfun.hpp"

namespace {

void BM_Gamma(benchmark::State& state) {
  double x = 0.31;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fdde::specfun::gamma(x));
    x = x < 150.0 ? x + 0.37 : 0.31;
  }
}
BENCHMARK(BM_Gamma);

void BM_RegIncBeta(benchmark::State& state) {
  double x = 0.02;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fdde::specfun::reg_inc_beta(x, 1.2, 4.0));
    x = x < 0.97 ? x + 0.013 : 0.02;
  }
}
BENCHMARK(BM_RegIncBeta);

void BM_MittagLeffler(benchmark::State& state) {
  const double z = -static_cast<double>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(fdde::specfun::mittag_leffler(2.0, 1.8, z));
}
BENCHMARK(BM_MittagLeffler)->Arg(4)->Arg(100)->Arg(900);

void BM_GlWeights(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(fdde::specfun::gl_weights(0.8, n));
}
BENCHMARK(BM_GlWeights)->Arg(256)->Arg(4096);

}  // namespace

BENCHMARK_MAIN();
