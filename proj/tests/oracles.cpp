#include "oracles.hpp"

#include <Eigen/LU>

#include <cmath>
#include <limits>

namespace oracles {

namespace {

double pencil_det(const Eigen::MatrixXd& m, const Eigen::MatrixXd& k, double lambda) {
  return (k - lambda * m).determinant();
}

double bisect(const Eigen::MatrixXd& m, const Eigen::MatrixXd& k, double lo, double hi,
              double flo) {
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = pencil_det(m, k, mid);
    if (fmid == 0.0) return mid;
    if ((flo < 0) == (fmid < 0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
    if (hi - lo < 1e-14 * (1.0 + std::abs(lo))) break;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

std::optional<Eigen::VectorXd> pencil_eigenvalues_by_bisection(const Eigen::MatrixXd& m,
                                                               const Eigen::MatrixXd& k,
                                                               double bound, int grid_points) {
  const int n = static_cast<int>(m.rows());
  if (grid_points <= 0) grid_points = 4000 * n;
  const double lo = -bound, hi = bound;
  const double step = (hi - lo) / grid_points;

  std::vector<double> roots;
  double prev_x = lo;
  double prev_f = pencil_det(m, k, prev_x);
  for (int i = 1; i <= grid_points; ++i) {
    const double x = lo + i * step;
    const double f = pencil_det(m, k, x);
    if (prev_f == 0.0) roots.push_back(prev_x);
    else if ((prev_f < 0) != (f < 0)) roots.push_back(bisect(m, k, prev_x, x, prev_f));
    prev_x = x;
    prev_f = f;
  }
  if (static_cast<int>(roots.size()) != n) return std::nullopt;
  Eigen::VectorXd out(n);
  for (int i = 0; i < n; ++i) out(i) = roots[i];
  return out;
}

Eigen::VectorXd box_qp_by_enumeration(const Eigen::VectorXd& x, double c) {
  const int d = static_cast<int>(x.size());
  long patterns = 1;
  for (int i = 0; i < d; ++i) patterns *= 3;

  Eigen::VectorXd best;
  double best_val = std::numeric_limits<double>::infinity();
  Eigen::VectorXd z(d);
  for (long code = 0; code < patterns; ++code) {
    long rest = code;
    bool feasible = true;
    for (int i = 0; i < d && feasible; ++i) {
      const int state = static_cast<int>(rest % 3);
      rest /= 3;
      if (state == 0) {
        z(i) = x(i);
        feasible = std::abs(x(i)) <= c;
      } else {
        z(i) = state == 1 ? c : -c;
      }
    }
    if (!feasible) continue;
    const double val = (z - x).squaredNorm();
    if (val < best_val) {
      best_val = val;
      best = z;
    }
  }
  return best;
}

std::vector<double> guided_free_beam_roots(int count) {
  std::vector<double> roots;
  auto f = [](double b) { return std::tan(b) + std::tanh(b); };
  for (int k = 1; roots.size() < static_cast<std::size_t>(count); ++k) {
    // One root per branch of tan between (k - 1/2)pi and k*pi.
    double lo = (k - 0.5) * M_PI + 1e-9;
    double hi = k * M_PI - 1e-12;
    double flo = f(lo);
    for (int iter = 0; iter < 200; ++iter) {
      const double mid = 0.5 * (lo + hi);
      const double fmid = f(mid);
      if ((flo < 0) == (fmid < 0)) {
        lo = mid;
        flo = fmid;
      } else {
        hi = mid;
      }
    }
    roots.push_back(0.5 * (lo + hi));
  }
  return roots;
}

}  // namespace oracles
