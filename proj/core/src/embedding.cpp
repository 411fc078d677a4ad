#include "modeswarm/embedding.hpp"

#include <cmath>
#include <random>
#include <string>

#include "modeswarm/rng.hpp"

namespace modeswarm {

EmbeddingMap make_embedding(Eigen::Index ambient_dim, Eigen::Index embedded_dim,
                            double box_halfwidth, std::uint64_t seed, GaussianScale scale) {
  if (embedded_dim < 1 || embedded_dim > ambient_dim)
    throw InvalidDimension("make_embedding: d = " + std::to_string(embedded_dim) +
                           " outside [1, " + std::to_string(ambient_dim) + "]");
  if (!(box_halfwidth > 0.0))
    throw NonPositiveInput("make_embedding: box halfwidth must be > 0");

  const double sigma = scale == GaussianScale::stddev_inv_sqrt_d
                           ? 1.0 / std::sqrt(static_cast<double>(embedded_dim))
                           : std::sqrt(1.0 / std::sqrt(static_cast<double>(embedded_dim)));
  auto engine = rng::make_engine(rng::derive_seed(seed, "embedding"));
  std::normal_distribution<double> gauss(0.0, sigma);

  EmbeddingMap map;
  map.ambient_dim = ambient_dim;
  map.embedded_dim = embedded_dim;
  map.box_halfwidth = box_halfwidth;
  map.seed = seed;
  map.matrix.resize(ambient_dim, embedded_dim);
  for (Eigen::Index j = 0; j < embedded_dim; ++j) {
    do {
      for (Eigen::Index i = 0; i < ambient_dim; ++i) map.matrix(i, j) = gauss(engine);
    } while (map.matrix.col(j).isZero(0.0));
  }
  return map;
}

Eigen::VectorXd box_project(const Eigen::VectorXd& x, double box_halfwidth) {
  if (!(box_halfwidth > 0.0))
    throw NonPositiveInput("box_project: box halfwidth must be > 0");
  return x.cwiseMax(-box_halfwidth).cwiseMin(box_halfwidth);
}

Eigen::VectorXd lift(const EmbeddingMap& map, const Eigen::VectorXd& y) {
  if (y.size() != map.embedded_dim)
    throw DimensionMismatch("lift: y has length " + std::to_string(y.size()) + ", expected " +
                            std::to_string(map.embedded_dim));
  return box_project(map.matrix * y, map.box_halfwidth);
}

JlBound jl_min_dimension(std::int64_t n, double epsilon) {
  if (n < 2) throw std::invalid_argument("jl_min_dimension: n must be >= 2");
  if (!(epsilon > 0.0) || epsilon > 1.0)
    throw InvalidEpsilon("jl_min_dimension: epsilon must be in (0, 1]");
  const double denom = epsilon * epsilon / 2.0 - epsilon * epsilon * epsilon / 3.0;
  JlBound b;
  b.n = n;
  b.epsilon = epsilon;
  b.k = static_cast<std::int64_t>(
      std::ceil(4.0 * std::log(static_cast<double>(n)) / denom));
  return b;
}

}  // namespace modeswarm
