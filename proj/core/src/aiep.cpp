#include "modeswarm/aiep.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace modeswarm {

SystemPair::SystemPair(SymMatrix m, SymMatrix k) : mass(std::move(m)), stiffness(std::move(k)) {
  if (mass.order() != stiffness.order())
    throw DimensionMismatch("SystemPair: M and K orders differ");
  if (!is_positive_definite(mass))
    throw NotPositiveDefinite("SystemPair: M must be positive definite");
}

DeltaPair::DeltaPair(Eigen::VectorXd packed_values, Eigen::Index n)
    : packed(std::move(packed_values)), order(n) {
  if (packed.size() != free_parameter_count(n))
    throw BadLength("DeltaPair: packed length " + std::to_string(packed.size()) +
                    " != N(N+1) = " + std::to_string(free_parameter_count(n)));
}

Eigen::Index free_parameter_count(Eigen::Index order) {
  if (order < 1) throw DimensionMismatch("free_parameter_count: order must be >= 1");
  return order * (order + 1);
}

DeltaPair pack(const SymMatrix& delta_m, const SymMatrix& delta_k) {
  if (delta_m.order() != delta_k.order())
    throw DimensionMismatch("pack: dM and dK orders differ");
  const Eigen::Index n = delta_m.order();
  Eigen::VectorXd packed(free_parameter_count(n));
  Eigen::Index pos = 0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i; j < n; ++j) packed(pos++) = delta_m(i, j);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i; j < n; ++j) packed(pos++) = delta_k(i, j);
  return DeltaPair(std::move(packed), n);
}

std::pair<SymMatrix, SymMatrix> unpack(const DeltaPair& delta) {
  const Eigen::Index n = delta.order;
  Eigen::MatrixXd dm = Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXd dk = Eigen::MatrixXd::Zero(n, n);
  Eigen::Index pos = 0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i; j < n; ++j) dm(i, j) = delta.packed(pos++);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i; j < n; ++j) dk(i, j) = delta.packed(pos++);
  return {SymMatrix(dm), SymMatrix(dk)};
}

AiepProblem::AiepProblem(SystemPair base_system, Eigen::VectorXd target_values, TargetKind kind,
                         double penalty_value)
    : base(std::move(base_system)),
      targets(std::move(target_values)),
      target_kind(kind),
      penalty(penalty_value) {
  if (targets.size() < 1 || targets.size() > base.order())
    throw DimensionMismatch("AiepProblem: need 1 <= n <= N targets");
  for (Eigen::Index i = 1; i < targets.size(); ++i)
    if (targets(i) < targets(i - 1))
      throw std::invalid_argument("AiepProblem: targets must be sorted ascending");
}

double objective(const AiepProblem& problem, const DeltaPair& delta) {
  if (delta.order != problem.base.order())
    throw DimensionMismatch("objective: delta order does not match the problem");
  auto [dm, dk] = unpack(delta);
  SymMatrix m = problem.base.mass + dm;
  if (!is_positive_definite(m)) return problem.penalty;
  SymMatrix k = problem.base.stiffness + dk;
  Eigen::VectorXd lambda = generalized_eigenvalues(m, k, problem.truncation());
  double sum = 0.0;
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    double value = lambda(i);
    if (problem.target_kind == TargetKind::frequencies)
      value = std::copysign(std::sqrt(std::abs(value)), value);
    const double diff = problem.targets(i) - value;
    sum += diff * diff;
  }
  return sum;
}

Objective embedded_objective(const AiepProblem& problem, const EmbeddingMap& map) {
  if (map.ambient_dim != problem.parameter_count())
    throw DimensionMismatch("embedded_objective: map.D = " + std::to_string(map.ambient_dim) +
                            " != parameter count " + std::to_string(problem.parameter_count()));
  const Eigen::Index order = problem.base.order();
  return [problem, map, order](const Eigen::VectorXd& y) {
    return objective(problem, DeltaPair(lift(map, y), order));
  };
}

Objective boxed_objective(const AiepProblem& problem, double box_halfwidth) {
  const Eigen::Index order = problem.base.order();
  return [problem, box_halfwidth, order](const Eigen::VectorXd& x) {
    return objective(problem, DeltaPair(box_project(x, box_halfwidth), order));
  };
}

SystemPair toy_system() {
  Eigen::MatrixXd k(10, 10);
  k << 200, -10, -20, -5, -5, -10, 0, 0, -50, -50,
      -10, 100, 0, 0, 0, 0, -20, -10, -20, -10,
      -20, 0, 300, -40, -30, -60, -10, 0, -20, -10,
      -5, 0, -40, 400, -30, -40, -50, -20, -10, -70,
      -5, 0, -30, -30, 150, -10, -5, -5, -20, 0,
      -10, 0, -60, -40, -10, 250, 0, 0, 0, -80,
      0, -20, -10, -50, -5, 0, 120, -5, 0, -10,
      0, -10, 0, -20, -5, 0, -5, 250, 0, -100,
      -50, -20, -20, -10, -20, 0, 0, 0, 350, -40,
      -50, -10, -10, -70, 0, -80, -10, -100, -40, 400;
  Eigen::VectorXd masses(10);
  for (int i = 0; i < 10; ++i) masses(i) = i + 1;
  return SystemPair(SymMatrix::diagonal(masses), SymMatrix(k));
}

}  // namespace modeswarm
