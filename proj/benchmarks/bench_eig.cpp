#include <benchmark/benchmark.h>

#include <random>

#include "modeswarm/femodel.hpp"
#include "modeswarm/linalg.hpp"

namespace {

modeswarm::SystemPair wing_system(int elements) {
  return modeswarm::assemble(modeswarm::b737_wing_config(elements),
                             modeswarm::Symmetry::symmetric)
      .system;
}

void BM_GeneralizedEigenvalues(benchmark::State& state) {
  const int elements = static_cast<int>(state.range(0));
  modeswarm::SystemPair system = wing_system(elements);
  for (auto _ : state) {
    auto lambda = modeswarm::generalized_eigenvalues(system.mass, system.stiffness, 3);
    benchmark::DoNotOptimize(lambda);
  }
  state.SetComplexityN(system.order());
}
BENCHMARK(BM_GeneralizedEigenvalues)->Arg(5)->Arg(10)->Arg(35)->Arg(100)->Complexity();

void BM_GeneralizedEigFullSpectrum(benchmark::State& state) {
  const int elements = static_cast<int>(state.range(0));
  modeswarm::SystemPair system = wing_system(elements);
  for (auto _ : state) {
    auto spectrum = modeswarm::generalized_eig(system.mass, system.stiffness,
                                               system.order());
    benchmark::DoNotOptimize(spectrum);
  }
}
BENCHMARK(BM_GeneralizedEigFullSpectrum)->Arg(5)->Arg(35);

void BM_IsPositiveDefinite(benchmark::State& state) {
  modeswarm::SystemPair system = wing_system(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(modeswarm::is_positive_definite(system.mass));
  }
}
BENCHMARK(BM_IsPositiveDefinite)->Arg(35)->Arg(100);

}  // namespace
