#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "modeswarm/pso.hpp"

using namespace modeswarm;

TEST_SUITE_BEGIN("pso");

TEST_CASE("sphere function reaches 1e-6 on most seeds with defaults") {
  int hits = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    PsoConfig config;
    config.particles = 50;
    config.max_iters = 200;
    config.seed = seed;
    PsoResult r = minimize([](const Eigen::VectorXd& x) { return x.squaredNorm(); }, 5, config);
    if (r.best_val < 1e-6) ++hits;
  }
  CHECK(hits >= 9);
}

TEST_CASE("pure inertial drift: x_k = x_0 + k v_0 when c1 = c2 = 0, omega = alpha = 1") {
  PsoConfig config;
  config.particles = 1;
  config.max_iters = 5;
  config.omega = 1.0;
  config.c1 = 0.0;
  config.c2 = 0.0;
  config.alpha = 1.0;
  config.seed = 3;

  std::vector<Eigen::VectorXd> visited;
  auto recorder = [&visited](const Eigen::VectorXd& x) {
    visited.push_back(x);
    return x.squaredNorm();
  };
  minimize(recorder, 3, config);
  REQUIRE(visited.size() == 6);  // initial position plus five iterations
  const Eigen::VectorXd x0 = visited[0];
  const Eigen::VectorXd v0 = visited[1] - visited[0];
  for (int k = 0; k < 6; ++k)
    CHECK((visited[k] - (x0 + k * v0)).lpNorm<Eigen::Infinity>() <= 1e-12);
}

TEST_CASE("stability region") {
  PsoConfig defaults;
  CHECK(stability_check(defaults));  // 2*0.7298 > 2*1.49618 - 2

  PsoConfig unstable;
  unstable.omega = 0.0;
  unstable.c1 = unstable.c2 = 2.0;
  CHECK_FALSE(stability_check(unstable));

  PsoConfig edge;
  edge.omega = 1.0;
  edge.c1 = edge.c2 = 1.99;
  CHECK(stability_check(edge));
}

TEST_CASE("trace is non-increasing and has max_iters + 1 entries") {
  PsoConfig config;
  config.particles = 20;
  config.max_iters = 60;
  config.seed = 17;
  auto rastrigin_like = [](const Eigen::VectorXd& x) {
    return x.squaredNorm() + 3.0 * (1.0 - std::cos(2.0 * x.sum()));
  };
  PsoResult r = minimize(rastrigin_like, 4, config);
  CHECK(r.trace.size() == 61);
  for (std::size_t i = 1; i < r.trace.size(); ++i) CHECK(r.trace[i] <= r.trace[i - 1]);
  CHECK(r.best_val == r.trace.back());
}

TEST_CASE("identical seed gives identical traces, for any thread count") {
  auto objective = [](const Eigen::VectorXd& x) { return (x.array() - 1.0).matrix().squaredNorm(); };
  PsoConfig config;
  config.particles = 30;
  config.max_iters = 40;
  config.seed = 5;
  PsoResult serial = minimize(objective, 6, config);
  config.threads = 4;
  PsoResult parallel = minimize(objective, 6, config);
  REQUIRE(serial.trace.size() == parallel.trace.size());
  for (std::size_t i = 0; i < serial.trace.size(); ++i)
    CHECK(serial.trace[i] == parallel.trace[i]);
  CHECK(serial.best_pos == parallel.best_pos);

  config.threads = 1;
  config.seed = 6;
  PsoResult other = minimize(objective, 6, config);
  CHECK(other.best_val != serial.best_val);
}

TEST_CASE("NaN objectives are rejected, +inf penalties are fine") {
  PsoConfig config;
  config.particles = 4;
  config.max_iters = 3;
  CHECK_THROWS_AS(
      minimize([](const Eigen::VectorXd&) { return std::nan(""); }, 2, config),
      ObjectiveNonFinite);

  auto with_penalty = [](const Eigen::VectorXd& x) {
    return x(0) > 0 ? std::numeric_limits<double>::infinity() : x.squaredNorm();
  };
  PsoResult r = minimize(with_penalty, 2, config);
  CHECK(std::isfinite(r.best_val));
}

TEST_CASE("velocity clamp caps the per-iteration step") {
  PsoConfig config;
  config.particles = 1;
  config.max_iters = 30;
  config.vmax = 0.01;
  config.seed = 9;
  config.init_span = 5.0;
  std::vector<Eigen::VectorXd> visited;
  minimize(
      [&visited](const Eigen::VectorXd& x) {
        visited.push_back(x);
        return x.squaredNorm();
      },
      3, config);
  for (std::size_t i = 1; i < visited.size(); ++i)
    CHECK((visited[i] - visited[i - 1]).lpNorm<Eigen::Infinity>() <= 0.01 + 1e-15);
}

TEST_CASE("per-dimension randomness explores anisotropically") {
  PsoConfig config;
  config.particles = 40;
  config.max_iters = 80;
  config.seed = 21;
  config.per_dimension_r = true;
  auto valley = [](const Eigen::VectorXd& x) {
    return std::pow(x(0) - 2.0, 2) + 100.0 * std::pow(x(1) + 1.0, 2);
  };
  PsoResult r = minimize(valley, 2, config);
  CHECK(r.best_val < 1e-4);
}

TEST_CASE("argument validation") {
  PsoConfig config;
  config.particles = 0;
  CHECK_THROWS_AS(minimize([](const Eigen::VectorXd&) { return 0.0; }, 2, config),
                  std::invalid_argument);
  config.particles = 1;
  config.max_iters = 0;
  CHECK_THROWS_AS(minimize([](const Eigen::VectorXd&) { return 0.0; }, 2, config),
                  std::invalid_argument);
}

TEST_SUITE_END();
