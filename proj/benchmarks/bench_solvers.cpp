#include <benchmark/benchmark.h>

#include <cmath>

#include "fdde/exact.hpp"
#include "fdde/solvers.hpp"

namespace {

const auto kLogistic = [](double, double y, double yd) {
  return -2.0 * y * (1.2 - yd);
};

void BM_SolvePiRect(benchmark::State& state) {
  const double h = 1.0 / static_cast<double>(state.range(0));
  fdde::NonlinearProblem p(fdde::Order(0.8), fdde::History::ramp(1.0, 1.0),
                           kLogistic);
  fdde::SolverConfig cfg{fdde::Scheme::pi_rect, fdde::StepMode::explicit_step,
                         {}, h, 5.0};
  for (auto _ : state) benchmark::DoNotOptimize(fdde::solve_pi_rect(p, cfg));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SolvePiRect)->Arg(64)->Arg(256)->Arg(1024)->Complexity();

void BM_SolveGlPhitau(benchmark::State& state) {
  const double h = 1.0 / static_cast<double>(state.range(0));
  fdde::NonlinearProblem p(fdde::Order(0.8), fdde::History::ramp(1.0, 1.0),
                           kLogistic);
  fdde::SolverConfig cfg{fdde::Scheme::gl_phitau, fdde::StepMode::explicit_step,
                         {}, h, 5.0};
  for (auto _ : state) benchmark::DoNotOptimize(fdde::solve_gl_phitau(p, cfg));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SolveGlPhitau)->Arg(64)->Arg(256)->Arg(1024)->Complexity();

void BM_ExactRampHistory(benchmark::State& state) {
  fdde::LinearProblem p(fdde::Order(0.8), -1.0, fdde::History::ramp(1.0, 1.0));
  double t = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fdde::exact_phitau_ramp_history(p, t));
    t = t < 9.0 ? t + 0.173 : 0.1;
  }
}
BENCHMARK(BM_ExactRampHistory);

void BM_GenIntegralCustom(benchmark::State& state) {
  fdde::LinearProblem p(fdde::Order(0.8), -1.0, fdde::History::ramp(1.0, 1.0));
  const auto corr = fdde::Forcing::custom([&p](double r) {
    return p.history.corrective_term(p.alpha, std::max(r, 1e-300));
  });
  const fdde::QuadratureSpec quad{static_cast<std::size_t>(state.range(0)), 2.0};
  for (auto _ : state)
    benchmark::DoNotOptimize(
        fdde::gen_integral(corr, p.alpha, p.lambda, p.tau(), 4.5, quad));
}
BENCHMARK(BM_GenIntegralCustom)->Arg(1 << 10)->Arg(1 << 13);

}  // namespace
