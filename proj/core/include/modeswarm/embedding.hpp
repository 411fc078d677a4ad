#ifndef MODESWARM_EMBEDDING_HPP
#define MODESWARM_EMBEDDING_HPP

#include <Eigen/Core>

#include <cstdint>

#include "modeswarm/errors.hpp"

namespace modeswarm {

/// Interpretation of the Gaussian entry scale 1/sqrt(d): as the standard
/// deviation (default) or as the variance.
enum class GaussianScale { stddev_inv_sqrt_d, variance_inv_sqrt_d };

/// Random linear map from a low-dimensional search space R^d into the box
/// [-c, c]^D: y -> clamp(A y). A is D x d with i.i.d. Gaussian entries,
/// deterministically derived from `seed`.
struct EmbeddingMap {
  Eigen::Index ambient_dim = 0;   // D
  Eigen::Index embedded_dim = 0;  // d
  Eigen::MatrixXd matrix;         // A, D x d
  double box_halfwidth = 0.0;     // c
  std::uint64_t seed = 0;
};

/// Draws the map. Entries are N(0, sigma) with sigma = 1/sqrt(d) read per
/// `scale`; a column that comes out identically zero (probability-zero
/// event) is re-drawn. Throws InvalidDimension unless 1 <= d <= D and
/// NonPositiveInput unless c > 0.
EmbeddingMap make_embedding(Eigen::Index ambient_dim, Eigen::Index embedded_dim,
                            double box_halfwidth, std::uint64_t seed,
                            GaussianScale scale = GaussianScale::stddev_inv_sqrt_d);

/// Componentwise clamp of x to [-c, c]: the exact least-squares projection
/// onto an axis-aligned box.
Eigen::VectorXd box_project(const Eigen::VectorXd& x, double box_halfwidth);

/// Maps y in R^d to box_project(A y) in [-c, c]^D.
Eigen::VectorXd lift(const EmbeddingMap& map, const Eigen::VectorXd& y);

/// Johnson-Lindenstrauss dimension bound for n points at distortion
/// epsilon in (0, 1]: the least k with k >= 4 ln(n) / (eps^2/2 - eps^3/3).
struct JlBound {
  std::int64_t n = 0;
  double epsilon = 0.0;
  std::int64_t k = 0;
};

JlBound jl_min_dimension(std::int64_t n, double epsilon);

}  // namespace modeswarm

#endif  // MODESWARM_EMBEDDING_HPP
