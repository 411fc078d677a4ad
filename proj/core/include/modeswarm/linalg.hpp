#ifndef MODESWARM_LINALG_HPP
#define MODESWARM_LINALG_HPP

#include <Eigen/Core>

#include <iosfwd>
#include <optional>
#include <string>

#include "modeswarm/errors.hpp"

namespace modeswarm {

/// Dense real symmetric matrix. The upper triangle is authoritative: any
/// square input is symmetrised by mirroring its upper triangle onto the
/// lower one, so entries(i,j) == entries(j,i) always holds.
class SymMatrix {
 public:
  /// Builds from a square matrix; mirrors the upper triangle.
  explicit SymMatrix(const Eigen::MatrixXd& a);

  /// Zero matrix of the given order.
  static SymMatrix zero(Eigen::Index order);
  /// Identity matrix of the given order.
  static SymMatrix identity(Eigen::Index order);
  /// Diagonal matrix from a vector.
  static SymMatrix diagonal(const Eigen::VectorXd& d);

  Eigen::Index order() const { return entries_.rows(); }
  const Eigen::MatrixXd& entries() const { return entries_; }
  double operator()(Eigen::Index i, Eigen::Index j) const { return entries_(i, j); }

  SymMatrix operator+(const SymMatrix& rhs) const;
  SymMatrix scaled(double s) const;

 private:
  Eigen::MatrixXd entries_;
};

/// Eigenvalues (ascending) and, optionally, the paired eigenvectors of a
/// symmetric or symmetric-definite eigenproblem. Column i of `eigenvectors`
/// goes with `eigenvalues[i]`. May hold only the k smallest pairs of a
/// larger problem (truncated modal data).
struct Spectrum {
  Eigen::VectorXd eigenvalues;
  std::optional<Eigen::MatrixXd> eigenvectors;

  Eigen::Index size() const { return eigenvalues.size(); }
};

/// True iff all Cholesky pivots of M exceed 1e-12 * max|M_ii|.
bool is_positive_definite(const SymMatrix& m);

/// Solves K v = lambda M v for the k algebraically smallest eigenpairs.
/// M must be symmetric positive definite. Eigenvectors are M-orthonormal
/// (v_i^T M v_j = delta_ij). The reduction is the standard stable route:
/// Cholesky M = L L^T, symmetric solve of L^-1 K L^-T, back-transform.
///
/// Throws NotPositiveDefinite if the Cholesky of M fails and
/// DimensionMismatch if the orders differ or k is out of range.
Spectrum generalized_eig(const SymMatrix& m, const SymMatrix& k_mat, Eigen::Index k);

/// Eigenvalue-only variant of generalized_eig; cheaper inside hot loops.
Eigen::VectorXd generalized_eigenvalues(const SymMatrix& m, const SymMatrix& k_mat, Eigen::Index k);

/// k smallest eigenpairs of the standard problem K v = lambda v
/// (equivalent to generalized_eig with M = I). Eigenvectors have unit 2-norm.
Spectrum standard_eig(const SymMatrix& k_mat, Eigen::Index k);

/// Plain-text matrix format: first line N, then N rows of N
/// whitespace-separated decimals. Used by the CLI for custom problems.
void save_matrix(std::ostream& out, const SymMatrix& m);
SymMatrix load_matrix(std::istream& in);
SymMatrix load_matrix_file(const std::string& path);

}  // namespace modeswarm

#endif  // MODESWARM_LINALG_HPP
