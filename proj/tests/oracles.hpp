// Independent oracles the implementation is checked against. These use
// deliberately different algorithms from the library paths they verify:
// characteristic-polynomial bisection instead of the Cholesky/QR route,
// active-set enumeration instead of clamping, and transcendental root
// finding for the closed-form beam modes.

#ifndef MODESWARM_TESTS_ORACLES_HPP
#define MODESWARM_TESTS_ORACLES_HPP

#include <Eigen/Core>

#include <optional>
#include <vector>

namespace oracles {

/// All N roots of det(K - lambda M) found by sign-change scanning plus
/// bisection on [-bound, bound]. Returns nullopt when the scan does not
/// isolate exactly N simple roots (clustered spectrum); callers re-draw.
std::optional<Eigen::VectorXd> pencil_eigenvalues_by_bisection(const Eigen::MatrixXd& m,
                                                               const Eigen::MatrixXd& k,
                                                               double bound,
                                                               int grid_points = 0);

/// Exact solution of min ||z - x||^2 over the box [-c, c]^D by enumerating
/// all 3^D active-set patterns (each coordinate interior, at +c or at -c).
Eigen::VectorXd box_qp_by_enumeration(const Eigen::VectorXd& x, double c);

/// First `count` roots beta_n of tan(b) + tanh(b) = 0 with b > 0: the
/// guided-free beam frequency equation. Non-dimensional frequencies of the
/// symmetric wing at R = 0 converge to beta_n^2.
std::vector<double> guided_free_beam_roots(int count);

}  // namespace oracles

#endif  // MODESWARM_TESTS_ORACLES_HPP
