#ifndef MODESWARM_PSO_HPP
#define MODESWARM_PSO_HPP

#include <Eigen/Core>

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "modeswarm/errors.hpp"

namespace modeswarm {

using Objective = std::function<double(const Eigen::VectorXd&)>;

struct PsoConfig {
  double omega = 0.7298;  // inertia weight
  double c1 = 1.49618;    // cognitive acceleration
  double c2 = 1.49618;    // social acceleration
  double alpha = 1.0;     // position step size
  int particles = 50;
  int max_iters = 100;
  std::uint64_t seed = 0;
  double init_span = 1.0;            // positions start in [-init_span, init_span]^dim
  std::optional<double> vmax;        // component-wise velocity clamp, off by default
  bool per_dimension_r = false;      // draw r1, r2 per dimension instead of per particle
  int threads = 1;                   // parallel objective evaluation; result is identical
};

/// True iff 2*omega > (c1 + c2) - 2, the one-particle convergence region.
bool stability_check(const PsoConfig& config);

/// Best objective value after each iteration; entry 0 is the best over the
/// initial swarm, so the vector has max_iters + 1 entries and is
/// non-increasing.
using ConvergenceTrace = std::vector<double>;

struct PsoResult {
  Eigen::VectorXd best_pos;
  double best_val = 0.0;
  ConvergenceTrace trace;
};

/// Minimises `objective` over R^dim with a synchronous particle swarm:
/// per iteration every particle draws fresh r1, r2 ~ U(0,1), all
/// velocities update, then all positions, then personal/global bests.
/// Runs exactly max_iters iterations. The objective must be total; +inf
/// penalties are allowed but NaN raises ObjectiveNonFinite. Identical
/// config and seed give an identical trace for any thread count.
PsoResult minimize(const Objective& objective, Eigen::Index dim, const PsoConfig& config);

}  // namespace modeswarm

#endif  // MODESWARM_PSO_HPP
