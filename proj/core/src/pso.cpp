#include "modeswarm/pso.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <thread>

#include "modeswarm/rng.hpp"

namespace modeswarm {

bool stability_check(const PsoConfig& config) {
  return 2.0 * config.omega > (config.c1 + config.c2) - 2.0;
}

namespace {

// Evaluates the objective for all rows of `positions` into `values`.
// Work is split by particle index, so the result does not depend on the
// thread count; all randomness stays in the caller.
void evaluate_all(const Objective& objective, const Eigen::MatrixXd& positions,
                  std::vector<double>& values, int threads) {
  const int n = static_cast<int>(positions.rows());
  auto worker = [&](int begin, int end, std::exception_ptr& error) {
    try {
      for (int i = begin; i < end; ++i) values[i] = objective(positions.row(i).transpose());
    } catch (...) {
      error = std::current_exception();
    }
  };
  if (threads <= 1 || n < 2) {
    std::exception_ptr error;
    worker(0, n, error);
    if (error) std::rethrow_exception(error);
    return;
  }
  const int used = std::min(threads, n);
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(used);
  const int chunk = (n + used - 1) / used;
  for (int t = 0; t < used; ++t) {
    const int begin = t * chunk;
    const int end = std::min(n, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back(worker, begin, end, std::ref(errors[t]));
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

void check_finite(const std::vector<double>& values) {
  for (double v : values)
    if (std::isnan(v))
      throw ObjectiveNonFinite("pso: objective returned NaN (use +inf for penalties)");
}

}  // namespace

PsoResult minimize(const Objective& objective, Eigen::Index dim, const PsoConfig& config) {
  if (config.particles < 1) throw std::invalid_argument("pso: particles must be >= 1");
  if (config.max_iters < 1) throw std::invalid_argument("pso: max_iters must be >= 1");
  if (dim < 1) throw std::invalid_argument("pso: dim must be >= 1");

  const int n = config.particles;
  auto engine = rng::make_engine(rng::derive_seed(config.seed, "pso"));
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  Eigen::MatrixXd x(n, dim), v(n, dim);
  for (int i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < dim; ++j)
      x(i, j) = config.init_span * (2.0 * unit(engine) - 1.0);
  for (int i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < dim; ++j)
      v(i, j) = 0.1 * config.init_span * (2.0 * unit(engine) - 1.0);

  std::vector<double> values(n);
  evaluate_all(objective, x, values, config.threads);
  check_finite(values);

  Eigen::MatrixXd best_pos = x;
  std::vector<double> best_val = values;
  int g = 0;
  for (int i = 1; i < n; ++i)
    if (best_val[i] < best_val[g]) g = i;
  Eigen::VectorXd global_pos = best_pos.row(g).transpose();
  double global_val = best_val[g];

  ConvergenceTrace trace;
  trace.reserve(config.max_iters + 1);
  trace.push_back(global_val);

  Eigen::VectorXd r1(dim), r2(dim);
  for (int iter = 0; iter < config.max_iters; ++iter) {
    for (int i = 0; i < n; ++i) {
      if (config.per_dimension_r) {
        for (Eigen::Index j = 0; j < dim; ++j) r1(j) = unit(engine);
        for (Eigen::Index j = 0; j < dim; ++j) r2(j) = unit(engine);
        v.row(i) = config.omega * v.row(i) +
                   config.c1 * r1.transpose().cwiseProduct(best_pos.row(i) - x.row(i)) +
                   config.c2 * r2.transpose().cwiseProduct(global_pos.transpose() - x.row(i));
      } else {
        const double s1 = unit(engine);
        const double s2 = unit(engine);
        v.row(i) = config.omega * v.row(i) + config.c1 * s1 * (best_pos.row(i) - x.row(i)) +
                   config.c2 * s2 * (global_pos.transpose() - x.row(i));
      }
      if (config.vmax) {
        const double cap = *config.vmax;
        v.row(i) = v.row(i).cwiseMax(-cap).cwiseMin(cap);
      }
    }
    x += config.alpha * v;

    evaluate_all(objective, x, values, config.threads);
    check_finite(values);
    for (int i = 0; i < n; ++i) {
      if (values[i] < best_val[i]) {
        best_val[i] = values[i];
        best_pos.row(i) = x.row(i);
      }
    }
    for (int i = 0; i < n; ++i) {
      if (best_val[i] < global_val) {
        global_val = best_val[i];
        global_pos = best_pos.row(i).transpose();
      }
    }
    trace.push_back(global_val);
  }

  PsoResult result;
  result.best_pos = global_pos;
  result.best_val = global_val;
  result.trace = std::move(trace);
  return result;
}

}  // namespace modeswarm
