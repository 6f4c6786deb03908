#include <benchmark/benchmark.h>

#include "speclab/geometry.hpp"
#include "speclab/heat.hpp"
#include "speclab/operators.hpp"
#include "speclab/tridiag.hpp"

using namespace speclab;

namespace {

ReducedOperator polynomial_operator(std::size_t nodes) {
  return assemble_operator(WarpingProfile::polynomial(2.0, 4), RadialGrid(0.01, nodes), OperatorKind::DiracSquared);
}

void BM_Assemble(benchmark::State& state) {
  const auto profile = WarpingProfile::polynomial(2.0, 4);
  const RadialGrid grid(0.01, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(assemble_operator(profile, grid, OperatorKind::DiracSquared));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Assemble)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Complexity(benchmark::oN);

// Eigenvalues below 1, the window used by the spectrum experiment.
void BM_EigenWindow(benchmark::State& state) {
  const auto op = polynomial_operator(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eig_sym_tridiag(op.diag, op.offdiag, 0.0, 1.0, 0.0));
}
BENCHMARK(BM_EigenWindow)->RangeMultiplier(4)->Range(1 << 10, 1 << 14)->Unit(benchmark::kMillisecond);

void BM_SpectralCalculus(benchmark::State& state) {
  const auto op = polynomial_operator(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(SpectralCalculus(op));
}
BENCHMARK(BM_SpectralCalculus)->Arg(250)->Arg(500)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_HeatMatrix(benchmark::State& state) {
  const auto op = polynomial_operator(static_cast<std::size_t>(state.range(0)));
  const SpectralCalculus calc(op);
  for (auto _ : state) benchmark::DoNotOptimize(calc.heat(1.0));
}
BENCHMARK(BM_HeatMatrix)->Arg(250)->Arg(500)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
