#include "modeswarm/linalg.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>

namespace modeswarm {

SymMatrix::SymMatrix(const Eigen::MatrixXd& a) {
  if (a.rows() != a.cols())
    throw DimensionMismatch("SymMatrix: input is " + std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()) + ", expected square");
  if (a.rows() < 1) throw DimensionMismatch("SymMatrix: order must be >= 1");
  entries_ = a.selfadjointView<Eigen::Upper>();
}

SymMatrix SymMatrix::zero(Eigen::Index order) {
  return SymMatrix(Eigen::MatrixXd::Zero(order, order));
}

SymMatrix SymMatrix::identity(Eigen::Index order) {
  return SymMatrix(Eigen::MatrixXd::Identity(order, order));
}

SymMatrix SymMatrix::diagonal(const Eigen::VectorXd& d) {
  return SymMatrix(Eigen::MatrixXd(d.asDiagonal()));
}

SymMatrix SymMatrix::operator+(const SymMatrix& rhs) const {
  if (order() != rhs.order())
    throw DimensionMismatch("SymMatrix::operator+: orders differ");
  return SymMatrix(entries_ + rhs.entries_);
}

SymMatrix SymMatrix::scaled(double s) const { return SymMatrix(entries_ * s); }

bool is_positive_definite(const SymMatrix& m) {
  const Eigen::MatrixXd& a = m.entries();
  const double tol = 1e-12 * a.diagonal().cwiseAbs().maxCoeff();
  Eigen::LLT<Eigen::MatrixXd> llt(a);
  if (llt.info() != Eigen::Success) return false;
  // Pivot d_ii of the LDL^T factorisation equals l_ii^2.
  const auto l_diag = llt.matrixLLT().diagonal();
  for (Eigen::Index i = 0; i < l_diag.size(); ++i)
    if (l_diag(i) * l_diag(i) <= tol) return false;
  return true;
}

namespace {

void check_pair(const SymMatrix& m, const SymMatrix& k_mat, Eigen::Index k) {
  if (m.order() != k_mat.order())
    throw DimensionMismatch("generalized_eig: M is order " + std::to_string(m.order()) +
                            " but K is order " + std::to_string(k_mat.order()));
  if (k < 1 || k > m.order())
    throw DimensionMismatch("generalized_eig: k = " + std::to_string(k) +
                            " outside [1, " + std::to_string(m.order()) + "]");
}

// K v = lambda M v reduced to the standard symmetric problem
// (L^-1 K L^-T) u = lambda u with M = L L^T, then v = L^-T u.
Eigen::MatrixXd reduce_to_standard(const SymMatrix& m, const SymMatrix& k_mat,
                                   Eigen::LLT<Eigen::MatrixXd>& llt) {
  llt.compute(m.entries());
  if (llt.info() != Eigen::Success)
    throw NotPositiveDefinite("generalized_eig: Cholesky of M failed");
  Eigen::MatrixXd b = llt.matrixL().solve(k_mat.entries());
  b = llt.matrixL().solve(b.transpose().eval());
  // Round-off can leave b slightly asymmetric; resymmetrise before QR.
  b = 0.5 * (b + b.transpose().eval());
  return b;
}

}  // namespace

Spectrum generalized_eig(const SymMatrix& m, const SymMatrix& k_mat, Eigen::Index k) {
  check_pair(m, k_mat, k);
  Eigen::LLT<Eigen::MatrixXd> llt;
  Eigen::MatrixXd b = reduce_to_standard(m, k_mat, llt);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(b, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("generalized_eig: eigensolver did not converge");
  Spectrum s;
  s.eigenvalues = solver.eigenvalues().head(k);
  s.eigenvectors =
      llt.matrixU().solve(Eigen::MatrixXd(solver.eigenvectors().leftCols(k)));
  return s;
}

Eigen::VectorXd generalized_eigenvalues(const SymMatrix& m, const SymMatrix& k_mat,
                                        Eigen::Index k) {
  check_pair(m, k_mat, k);
  Eigen::LLT<Eigen::MatrixXd> llt;
  Eigen::MatrixXd b = reduce_to_standard(m, k_mat, llt);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(b, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("generalized_eigenvalues: eigensolver did not converge");
  return solver.eigenvalues().head(k);
}

Spectrum standard_eig(const SymMatrix& k_mat, Eigen::Index k) {
  if (k < 1 || k > k_mat.order())
    throw DimensionMismatch("standard_eig: k = " + std::to_string(k) + " outside [1, " +
                            std::to_string(k_mat.order()) + "]");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(k_mat.entries(),
                                                        Eigen::ComputeEigenvectors);
  Spectrum s;
  s.eigenvalues = solver.eigenvalues().head(k);
  s.eigenvectors = solver.eigenvectors().leftCols(k);
  return s;
}

void save_matrix(std::ostream& out, const SymMatrix& m) {
  const Eigen::Index n = m.order();
  out << n << '\n';
  out.precision(17);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (j) out << ' ';
      out << m(i, j);
    }
    out << '\n';
  }
}

SymMatrix load_matrix(std::istream& in) {
  Eigen::Index n = 0;
  if (!(in >> n) || n < 1)
    throw std::invalid_argument("load_matrix: bad or missing order on first line");
  Eigen::MatrixXd a(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (!(in >> a(i, j)))
        throw std::invalid_argument("load_matrix: expected " + std::to_string(n * n) +
                                    " entries, ran out at row " + std::to_string(i));
  return SymMatrix(a);
}

SymMatrix load_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("load_matrix_file: cannot open " + path);
  return load_matrix(in);
}

}  // namespace modeswarm
