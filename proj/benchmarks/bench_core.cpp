#include <benchmark/benchmark.h>

#include "casimir/counterterm.hpp"
#include "casimir/euler_maclaurin.hpp"
#include "casimir/finite_part.hpp"
#include "casimir/image_sum.hpp"
#include "casimir/mode_sum.hpp"

using namespace casimir;

namespace {
const PlateGeometry kD1{1.0, BoundaryCondition::dirichlet};
const PlateGeometry kP1{1.0, BoundaryCondition::periodic};
}  // namespace

static void BM_DensityDirectExp(benchmark::State& state) {
  auto reg = Regulator::exponential();
  CutoffLambda L(1.0 / static_cast<double>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(density_direct(0.3, kD1, L, reg).value);
}
BENCHMARK(BM_DensityDirectExp)->Arg(10)->Arg(100)->Arg(1000);

static void BM_DensityDirectGauss(benchmark::State& state) {
  auto reg = Regulator::gaussian();
  CutoffLambda L(0.05);
  for (auto _ : state)
    benchmark::DoNotOptimize(density_direct(0.3, kD1, L, reg, 1e-10).value);
}
BENCHMARK(BM_DensityDirectGauss);

static void BM_DensityClosed(benchmark::State& state) {
  CutoffLambda L(0.1);
  for (auto _ : state)
    benchmark::DoNotOptimize(density_closed(0.3, 1.0, L, BoundaryCondition::dirichlet));
}
BENCHMARK(BM_DensityClosed);

static void BM_DensityLimit(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(density_limit(0.3, 1.0, BoundaryCondition::dirichlet));
}
BENCHMARK(BM_DensityLimit);

static void BM_TailIntegralGauss(benchmark::State& state) {
  auto reg = Regulator::gaussian();
  for (auto _ : state)
    benchmark::DoNotOptimize(tail_integral(reg, 3.14, CutoffLambda(0.5)));
}
BENCHMARK(BM_TailIntegralGauss);

static void BM_Sigma2(benchmark::State& state) {
  auto reg = state.range(0) == 0 ? Regulator::exponential() : Regulator::rational();
  auto gf = GFunction::dirichlet(1.0, CutoffLambda(0.01), reg);
  for (auto _ : state) benchmark::DoNotOptimize(sigma_k(gf, 2));
}
BENCHMARK(BM_Sigma2)->Arg(0)->Arg(1);

static void BM_EnergyDirectExp(benchmark::State& state) {
  auto reg = Regulator::exponential();
  CutoffLambda L(0.005);
  for (auto _ : state)
    benchmark::DoNotOptimize(energy_per_area_direct(kD1, L, reg));
}
BENCHMARK(BM_EnergyDirectExp);

static void BM_Decompose(benchmark::State& state) {
  auto reg = Regulator::exponential();
  const double sweep[] = {0.05, 0.02, 0.01, 0.005};
  for (auto _ : state) benchmark::DoNotOptimize(decompose_energy(kD1, reg, sweep));
}
BENCHMARK(BM_Decompose);

static void BM_PfEnergy(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(pf_energy_per_area_dirichlet(1.0, 1e-12));
}
BENCHMARK(BM_PfEnergy);

BENCHMARK_MAIN();
