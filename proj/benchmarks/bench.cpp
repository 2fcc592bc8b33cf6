#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "boussinesq/circulant.hpp"
#include "boussinesq/dispersive.hpp"
#include "boussinesq/hyperbolic.hpp"
#include "boussinesq/splitting.hpp"

using namespace boussinesq;

namespace {

PhysParams params() {
  PhysParams p;
  p.epsilon = 0.5;
  return p;
}

CellState smooth_cells(const Grid& g) {
  return CellState(cell_averages(g, [](double x) { return 0.3 * std::exp(-x * x); }),
                   cell_averages(g, [](double x) { return 0.1 * std::sin(x); }));
}

}  // namespace

static void BM_HyperbolicRhs(benchmark::State& state) {
  const Grid g(-20.0, 20.0, static_cast<std::size_t>(state.range(0)));
  const CellState c = smooth_cells(g);
  for (auto _ : state) benchmark::DoNotOptimize(hyperbolic::hyperbolic_rhs(c, g.dx(), params()));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_HyperbolicRhs)->RangeMultiplier(4)->Range(256, 16384)->Complexity(benchmark::oN);

static void BM_CyclicSolve(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const PeriodicStencil s({-0.01, 0.2, 1.6, 0.2, -0.01});
  const CyclicBandedSolver solver(s, n);
  std::vector<double> rhs(n), x(n);
  for (std::size_t i = 0; i < n; ++i) rhs[i] = std::sin(0.01 * i);
  for (auto _ : state) {
    solver.solve(rhs, x);
    benchmark::DoNotOptimize(x.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CyclicSolve)->RangeMultiplier(4)->Range(256, 16384)->Complexity(benchmark::oN);

static void BM_DispersiveStep(benchmark::State& state) {
  const Grid g(-20.0, 20.0, static_cast<std::size_t>(state.range(0)));
  const auto variant = static_cast<ModelVariant>(state.range(1));
  PhysParams p = params();
  const auto ops = dispersive::build_operators(g, p, variant);
  const CellState c = smooth_cells(g);
  const NodalState s(c.zeta, c.v);
  for (auto _ : state) benchmark::DoNotOptimize(dispersive::rk4_fd_step(s, 0.01, ops));
}
BENCHMARK(BM_DispersiveStep)
    ->ArgsProduct({{1024, 4096}, {static_cast<long>(ModelVariant::FactorizedAll), static_cast<long>(ModelVariant::Unfactorized)}});

static void BM_StrangStep(benchmark::State& state) {
  const Grid g(-20.0, 20.0, static_cast<std::size_t>(state.range(0)));
  splitting::StepOptions opts;
  opts.conversion = static_cast<splitting::ConversionScheme>(state.range(1));
  const splitting::StrangSplitting scheme(g, params(), ModelVariant::FactorizedAll, opts);
  const splitting::RunState start = scheme.initial_state(smooth_cells(g));
  const double dt = splitting::choose_dt(start.cells, params(), g.dx());
  for (auto _ : state) {
    splitting::RunState run = start;
    scheme.step(run, dt);
    benchmark::DoNotOptimize(run.cells.zeta.data());
  }
}
BENCHMARK(BM_StrangStep)
    ->ArgsProduct({{1024, 4096},
                   {static_cast<long>(splitting::ConversionScheme::Symmetrized),
                    static_cast<long>(splitting::ConversionScheme::LeftOnly)}});

BENCHMARK_MAIN();
