#include <benchmark/benchmark.h>

#include <random>

#include "modeswarm/aiep.hpp"
#include "modeswarm/femodel.hpp"

namespace {

Eigen::VectorXd random_point(Eigen::Index dim, double span, std::mt19937_64& engine) {
  std::uniform_real_distribution<double> u(-span, span);
  Eigen::VectorXd x(dim);
  for (Eigen::Index i = 0; i < dim; ++i) x(i) = u(engine);
  return x;
}

void BM_ToyObjective(benchmark::State& state) {
  modeswarm::AiepProblem problem(modeswarm::toy_system(), Eigen::Vector2d(2.0, 5.0));
  std::mt19937_64 engine(1);
  Eigen::VectorXd x = random_point(110, 0.3, engine);
  for (auto _ : state) {
    benchmark::DoNotOptimize(modeswarm::objective(problem, modeswarm::DeltaPair(x, 10)));
  }
}
BENCHMARK(BM_ToyObjective);

void BM_ToyEmbeddedObjective(benchmark::State& state) {
  modeswarm::AiepProblem problem(modeswarm::toy_system(), Eigen::Vector2d(2.0, 5.0));
  const Eigen::Index d = state.range(0);
  modeswarm::EmbeddingMap map = modeswarm::make_embedding(110, d, 10.0, 3);
  modeswarm::Objective objective = modeswarm::embedded_objective(problem, map);
  std::mt19937_64 engine(2);
  Eigen::VectorXd y = random_point(d, 0.5, engine);
  for (auto _ : state) {
    benchmark::DoNotOptimize(objective(y));
  }
}
BENCHMARK(BM_ToyEmbeddedObjective)->Arg(10)->Arg(50);

void BM_WingEmbeddedObjective(benchmark::State& state) {
  const int elements = static_cast<int>(state.range(0));
  modeswarm::SystemPair system =
      modeswarm::assemble(modeswarm::b737_wing_config(elements),
                          modeswarm::Symmetry::symmetric)
          .system;
  Eigen::Vector3d targets(2.0, 7.0, 22.0);
  modeswarm::AiepProblem problem(system, targets, modeswarm::TargetKind::frequencies);
  modeswarm::EmbeddingMap map =
      modeswarm::make_embedding(problem.parameter_count(), 300, 10.0, 5);
  modeswarm::Objective objective = modeswarm::embedded_objective(problem, map);
  std::mt19937_64 engine(4);
  Eigen::VectorXd y = random_point(300, 0.5, engine);
  for (auto _ : state) {
    benchmark::DoNotOptimize(objective(y));
  }
}
BENCHMARK(BM_WingEmbeddedObjective)->Arg(35);

}  // namespace
