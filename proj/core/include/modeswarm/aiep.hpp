#ifndef MODESWARM_AIEP_HPP
#define MODESWARM_AIEP_HPP

#include <Eigen/Core>

#include <utility>

#include "modeswarm/embedding.hpp"
#include "modeswarm/linalg.hpp"
#include "modeswarm/pso.hpp"

namespace modeswarm {

/// Undamped system (M, K) with M symmetric positive definite: the ground
/// truth an additive perturbation is applied to.
struct SystemPair {
  SystemPair(SymMatrix mass, SymMatrix stiffness);

  SymMatrix mass;
  SymMatrix stiffness;
  Eigen::Index order() const { return mass.order(); }
};

/// The perturbation pair (dM, dK) packed as one real vector: the dM upper
/// triangle first (row-major, diagonal included), then the dK triangle.
/// Total length N(N+1).
struct DeltaPair {
  DeltaPair(Eigen::VectorXd packed_values, Eigen::Index order);

  Eigen::VectorXd packed;
  Eigen::Index order;
};

/// Free parameters of the perturbation for a system of the given order:
/// N(N+1)/2 per triangle, two triangles.
Eigen::Index free_parameter_count(Eigen::Index order);

DeltaPair pack(const SymMatrix& delta_m, const SymMatrix& delta_k);
std::pair<SymMatrix, SymMatrix> unpack(const DeltaPair& delta);

/// What the truncated targets are compared against: raw eigenvalues, or
/// frequencies sign(lambda)*sqrt(|lambda|) (the signed square root keeps
/// the objective smooth when a trial eigenvalue goes negative).
enum class TargetKind { eigenvalues, frequencies };

/// The additive inverse eigenvalue problem: find (dM, dK) such that the
/// n smallest eigenvalues of (M + dM, K + dK) match `targets`. Trials
/// where M + dM loses positive definiteness score `penalty`.
struct AiepProblem {
  AiepProblem(SystemPair base_system, Eigen::VectorXd target_values,
              TargetKind kind = TargetKind::eigenvalues, double penalty_value = 1e12);

  SystemPair base;
  Eigen::VectorXd targets;  // ascending, length n <= N
  TargetKind target_kind;
  double penalty;

  Eigen::Index truncation() const { return targets.size(); }
  Eigen::Index parameter_count() const { return free_parameter_count(base.order()); }
};

/// Sum of squared mismatches between the targets and the n smallest
/// (transformed) eigenvalues of the perturbed system; `penalty` when
/// M + dM is not positive definite. Total by construction.
double objective(const AiepProblem& problem, const DeltaPair& delta);

/// The objective composed with an embedding: y -> objective(lift(map, y)).
/// Throws DimensionMismatch unless map.ambient_dim == N(N+1).
Objective embedded_objective(const AiepProblem& problem, const EmbeddingMap& map);

/// Objective over the raw packed vector, clamped to [-c, c]^D first; the
/// full-dimensional counterpart of an embedded run.
Objective boxed_objective(const AiepProblem& problem, double box_halfwidth);

/// The 10-DOF benchmark system: M = diag(1..10) and a fixed 10x10
/// stiffness matrix; its first two eigenvalues are near 10.99 and 19.12.
SystemPair toy_system();

}  // namespace modeswarm

#endif  // MODESWARM_AIEP_HPP
