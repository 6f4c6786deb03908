#pragma once

// Symmetric tridiagonal eigensolver: Sturm-sequence bisection for eigenvalues in a window and
// inverse iteration (with reorthogonalisation inside clusters) for eigenvectors.

#include <Eigen/Dense>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace speclab {

/// Number of eigenvalues strictly below x.
std::size_t sturm_count(std::span<const double> diag, std::span<const double> offdiag, double x);

/// Gershgorin enclosure [lo, hi] of the spectrum.
std::pair<double, double> gershgorin_interval(std::span<const double> diag, std::span<const double> offdiag);

/// max_i sum_j |T_ij|.
double tridiag_norm_inf(std::span<const double> diag, std::span<const double> offdiag);

struct TridiagEigen {
  std::vector<double> values;        ///< ascending
  Eigen::MatrixXd vectors;           ///< columns, empty unless requested
  double max_residual = 0.0;         ///< max_k ||T v_k - lambda_k v_k||_2
  std::vector<std::string> warnings;
};

/// Default bisection tolerance 1e-9 * max(1, ||T||_inf).
double default_eig_tolerance(std::span<const double> diag, std::span<const double> offdiag);

/// All eigenvalues in [lo, hi], each bisected to width <= tol. tol == 0 bisects to the
/// resolution of floating point. Eigenvectors (unit 2-norm) come from inverse iteration.
TridiagEigen eig_sym_tridiag(std::span<const double> diag, std::span<const double> offdiag, double lo, double hi,
                             double tol, bool want_vectors = false);

/// Every eigenpair of T.
TridiagEigen eig_sym_tridiag_all(std::span<const double> diag, std::span<const double> offdiag, double tol,
                                 bool want_vectors);

}  // namespace speclab
