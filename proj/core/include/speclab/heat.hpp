#pragma once

// Spectral calculus for the assembled radial operators: heat semigroups, heat kernels against the
// measure rho dt, resolvent powers, and audits of the domination, L^p growth and kernel-decay
// inequalities.

#include <Eigen/Dense>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "speclab/geometry.hpp"
#include "speclab/grid.hpp"
#include "speclab/operators.hpp"

namespace speclab {

/// Eigendecomposition T = V diag(lambda) V^T of a symmetric tridiagonal matrix, computed once.
class SpectralCalculus {
 public:
  SpectralCalculus(std::span<const double> diag, std::span<const double> offdiag);
  explicit SpectralCalculus(const ReducedOperator& op);

  std::size_t size() const { return values_.size(); }
  const std::vector<double>& eigenvalues() const { return values_; }
  const Eigen::MatrixXd& eigenvectors() const { return vectors_; }
  const std::vector<std::string>& warnings() const { return warnings_; }
  double matrix_norm() const { return norm_; }
  double max_residual() const { return max_residual_; }

  /// V e^{-tau Lambda} V^T.
  Eigen::MatrixXd heat(double tau) const;
  /// Row j of the heat matrix.
  Eigen::VectorXd heat_row(double tau, std::size_t j) const;
  double heat_entry(double tau, std::size_t j, std::size_t k) const;

  /// V (Lambda - xi)^{-m} V^T. Throws NumericError when xi is within tolerance of an eigenvalue.
  Eigen::MatrixXcd resolvent_power(Complex xi, int m) const;
  Eigen::VectorXcd resolvent_power_row(Complex xi, int m, std::size_t j) const;

  /// T x for the stored matrix.
  Eigen::VectorXd apply(const Eigen::VectorXd& x) const;
  Eigen::MatrixXd apply(const Eigen::MatrixXd& x) const;

 private:
  Eigen::VectorXcd resolvent_weights(Complex xi, int m) const;

  std::vector<double> diag_;
  std::vector<double> offdiag_;
  std::vector<double> values_;
  Eigen::MatrixXd vectors_;
  std::vector<std::string> warnings_;
  double norm_ = 0.0;
  double max_residual_ = 0.0;
  double tolerance_ = 0.0;
};

struct SemigroupMatrix {
  double tau = 0.0;
  Eigen::MatrixXd E;                ///< flat-coordinate e^{-tau L}
  double commutator_residual = 0.0; ///< ||E T - T E||_inf
};

/// Throws NumericError if the eigenvectors fail their residual test.
SemigroupMatrix heat_matrix(const SpectralCalculus& calculus, double tau);
SemigroupMatrix heat_matrix(const ReducedOperator& op, double tau);
SemigroupMatrix heat_matrix(std::span<const double> diag, std::span<const double> offdiag, double tau);

/// H(t_j, t_k, tau) = E_jk / (sqrt(rho_j rho_k) h).
double heat_kernel_value(const ReducedOperator& op, const SpectralCalculus& calculus, double tau, std::size_t j,
                         std::size_t k);
double heat_kernel_value(const ReducedOperator& op, double tau, std::size_t j, std::size_t k);

struct DominationEntry {
  double tau = 0.0;
  double max_violation = 0.0;  ///< max_{j,k} |E_D| - e^{K1 tau} E_Delta (flat coordinates)
  double scale = 0.0;          ///< max_{j,k} e^{K1 tau} E_Delta
};

struct DominationResult {
  double K1 = 0.0;
  std::vector<DominationEntry> entries;
  double max_relative_violation = 0.0;  ///< max over tau of violation / scale
  bool passed = false;                  ///< every violation <= 1e-8 scale
};

/// Entrywise |H_{D^2}(j, k, tau)| <= e^{K1 tau} h_Delta(j, k, tau).
DominationResult domination_check(const WarpingProfile& profile, const RadialGrid& grid,
                                  std::span<const double> tau_list);

struct PNormEntry {
  double tau = 0.0;
  double norm = 0.0;    ///< ||e^{-tau L}||_{p->p, rho}
  double scaled = 0.0;  ///< norm e^{-K1 tau}
};

struct PNormResult {
  double p = 1.0;
  double K1 = 0.0;
  std::vector<PNormEntry> entries;
  double max_scaled = 0.0;
  bool passed = false;  ///< max_scaled <= 1 + 1e-8
};

/// Weighted operator norm on L^p(rho dt), p = 1 or +inf.
double weighted_operator_norm(const Eigen::MatrixXd& E, std::span<const double> log_rho, double p);

PNormResult pnorm_growth_check(const ReducedOperator& op, std::span<const double> tau_list, double p);
PNormResult pnorm_growth_check(const ReducedOperator& op, const SpectralCalculus& calculus,
                               std::span<const double> tau_list, double p);

struct KernelSample {
  double tau = 0.0;  ///< NaN for resolvent samples
  double x = 0.0;
  double y = 0.0;
  double distance = 0.0;
  double log_abs = 0.0;  ///< log |kernel|
};

struct KernelSampleOptions {
  std::size_t rows = 24;         ///< source positions, spread evenly over the interior
  double column_step = 0.1;      ///< spacing of target positions
  double max_distance_fraction = 0.8;
  double noise_floor = 1e-10;    ///< samples below this fraction of the largest |kernel| are dropped
};

struct KernelBoundFit {
  std::string form;  ///< "heatg", "heat42" or "res1"
  std::vector<std::pair<std::string, double>> constants;
  double max_log_violation = 0.0;       ///< max over samples of log|kernel| - log bound
  double max_relative_violation = 0.0;  ///< expm1(max_log_violation)
  bool passed = false;
  std::vector<KernelSample> samples;
  std::string sample_description;

  double constant(std::string_view name) const;
};

struct GaussianFitOptions {
  KernelSampleOptions sampling;
  double C4_min = 4.0;
  double C4_max = 16.0;
  double C4_step = 0.05;
  double C5_max = 10.0;
  double C5_step = 0.25;
  std::optional<double> forced_C4;
  double volume_step = 0.01;
};

/// |H| <= C3 V(x, sqrt tau)^{-1/2} V(y, sqrt tau)^{-1/2} exp(-d^2/(C4 tau) + C5 sqrt(K0 tau) + K1 tau).
/// C3 is fitted on the samples with d^2/tau at most half the largest value; (C4, C5) is the smallest pair, C4 first, for
/// which that C3 also holds on the farther half. The reported C3 covers every sample.
KernelBoundFit gaussian_bound_fit(const WarpingProfile& profile, const RadialGrid& grid,
                                  std::span<const double> tau_list, double delta,
                                  const GaussianFitOptions& options = {});
KernelBoundFit gaussian_bound_fit(const WarpingProfile& profile, const ReducedOperator& op,
                                  const SpectralCalculus& calculus, std::span<const double> tau_list, double delta,
                                  const GaussianFitOptions& options = {});

struct MuFormOptions {
  KernelSampleOptions sampling;
  double volume_step = 0.01;
};

/// |H| <= C mu(x)^2 max(tau^{-n/2}, 1) e^{-beta d} e^{-(alpha + 1) tau} with alpha < 0.
KernelBoundFit mu_form_bound_fit(const WarpingProfile& profile, const RadialGrid& grid, double beta,
                                 std::span<const double> tau_list, const MuFormOptions& options = {});
KernelBoundFit mu_form_bound_fit(const WarpingProfile& profile, const ReducedOperator& op,
                                 const SpectralCalculus& calculus, double beta, std::span<const double> tau_list,
                                 const MuFormOptions& options = {});

struct ResolventKernel {
  Eigen::MatrixXcd G;  ///< kernel form G_jk / (sqrt(rho_j rho_k) h); empty if not requested
  KernelBoundFit fit;
};

struct ResolventOptions {
  KernelSampleOptions sampling;
  double volume_step = 0.01;
  bool keep_matrix = false;
  double max_rate = 10.0;
};

/// (L - xi)^{-m} as a kernel against rho dt and the fit |G| <= C mu(x) mu(y) e^{-eps d}.
ResolventKernel resolvent_power_kernel(const ReducedOperator& op, const WarpingProfile& profile, Complex xi, int m,
                                       const ResolventOptions& options = {});
ResolventKernel resolvent_power_kernel(const ReducedOperator& op, const SpectralCalculus& calculus,
                                       const WarpingProfile& profile, Complex xi, int m,
                                       const ResolventOptions& options = {});

/// (T - xi)^{-m} for a bare tridiagonal matrix (flat coordinates).
Eigen::MatrixXcd resolvent_power_matrix(std::span<const double> diag, std::span<const double> offdiag, Complex xi,
                                        int m);

struct LaplaceCheck {
  double relative_error = 0.0;
  double tau_max_used = 0.0;
  double tau_max_required = 0.0;
  std::size_t steps = 0;
};

/// Compares (1/Gamma(m/2)) int_0^inf e^{-tL} t^{m/2-1} e^{alpha t} dt with (L - alpha)^{-m/2} on a
/// deterministic probe vector. Throws NumericError when tau_max is too short for alpha.
LaplaceCheck resolvent_laplace_check(std::span<const double> diag, std::span<const double> offdiag, double alpha,
                                     int m, double tau_max, std::size_t steps = 4000);
LaplaceCheck resolvent_laplace_check(const ReducedOperator& op, double alpha, int m, double tau_max,
                                     std::size_t steps = 4000);

/// log of rhs minus log of lhs in e^{-d^2/(4 c tau)} <= e^{-gamma d} e^{c gamma^2 tau}; never negative.
double gaussian_completion_gap(double d, double c, double tau, double gamma);

/// sup over the grid nodes of max(0, (n-1) f''/f).
double ricci_lower_bound(const WarpingProfile& profile, const RadialGrid& grid);

}  // namespace speclab
