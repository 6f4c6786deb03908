#pragma once

// Kernel-sector reduction of the Dirac operator on a warped end: spinors u(t) phi with phi a
// harmonic spinor of the cross-section. D acts as sign * i (u' + a u) and D^2 as
// -u'' - 2 a u' + q u with q = -(a' + a^2).

#include <span>
#include <vector>

#include "speclab/geometry.hpp"
#include "speclab/grid.hpp"

namespace speclab {

enum class OperatorKind { DiracSquared, ScalarLaplacian };
enum class BoundaryCondition { Dirichlet, Neumann };

const char* to_string(OperatorKind kind);
const char* to_string(BoundaryCondition bc);

/// a(t) = (n-1) f'(t) / (2 f(t)).
double connection_coefficient(const WarpingProfile& profile, double t);

/// Radial coefficient of D psi, sign = +1 or -1 for the Clifford eigenvalue +-i of nu on phi.
/// Central differences inside, one-sided second-order stencils at the two end nodes.
RadialSection apply_dirac(const RadialSection& section, const WarpingProfile& profile, int sign = 1);

/// Radial coefficient of D^2 psi = -u'' - 2 a u' + q u.
RadialSection apply_dirac_squared(const RadialSection& section, const WarpingProfile& profile);

/// Radial scalar Laplacian -u'' - 2 a u' (the nonnegative Laplacian of the warped metric).
RadialSection apply_scalar_laplacian(const RadialSection& section, const WarpingProfile& profile);

/// Throws AccuracyError when |a| h > 0.5 at some node.
void check_resolution(const WarpingProfile& profile, const RadialGrid& grid);

/// Flux-form discretisation in the measure rho dt, symmetrised by the similarity
/// w = rho^{1/2} h^{1/2} u. `diag`/`offdiag` hold the symmetric matrix acting on w.
struct ReducedOperator {
  OperatorKind kind = OperatorKind::DiracSquared;
  BoundaryCondition bc = BoundaryCondition::Dirichlet;
  RadialGrid grid{1.0, 3};
  std::vector<double> diag;
  std::vector<double> offdiag;
  std::vector<double> connection;  ///< a_j
  std::vector<double> potential;   ///< q_j, zero for the scalar Laplacian
  std::vector<double> log_rho;     ///< log rho_j
  double K1 = 0.0;                 ///< max(0, -min_j q_j)

  std::size_t size() const { return diag.size(); }
  /// L u in the original (weighted-measure) coordinates.
  std::vector<Complex> apply(std::span<const Complex> u) const;
  /// T w in flat coordinates.
  std::vector<double> apply_flat(std::span<const double> w) const;
  /// Flat coordinates w_j = sqrt(rho_j h) u_j, up to the global factor exp(-shift).
  double log_flat_scale(std::size_t j) const;
};

ReducedOperator assemble_operator(const WarpingProfile& profile, const RadialGrid& grid, OperatorKind kind,
                                  BoundaryCondition bc = BoundaryCondition::Dirichlet);

/// (sum_j |u_j|^p rho_j h)^{1/p}; p = +inf gives max_j |u_j|.
double weighted_norm(const RadialSection& section, const WarpingProfile& profile, double p);
double weighted_norm(std::span<const Complex> values, std::span<const double> log_rho, double h, double p);
/// log of weighted_norm, finite where the norm itself would overflow.
double log_weighted_norm(std::span<const Complex> values, std::span<const double> log_rho, double h, double p);

struct KatoResult {
  double max_violation = 0.0;  ///< max_j |u|(Delta_h |u| - K1 |u|) - Re(L_h u conj(u))
  std::size_t skipped = 0;     ///< nodes with |u_j| < 1e-12
  std::size_t tested = 0;
  double slack = 0.0;
  bool passed = false;
};

/// Pointwise Kato inequality Re<D^2 psi, psi> >= |psi| (Delta - K1) |psi| at interior nodes.
KatoResult kato_pointwise_check(const RadialSection& section, const WarpingProfile& profile);

struct SpectrumWindow {
  double lambda_max = 0.0;
  std::vector<double> eigenvalues;
  double max_gap = 0.0;
  double T_max = 0.0;
  double h = 0.0;
};

/// Eigenvalues <= lambda_max of the DiracSquared operator on [0, T_max] and the largest gap in
/// [0, lambda_max] (0 and lambda_max count as sentinels). Requires h sqrt(lambda_max) <= 0.05.
SpectrumWindow spectrum_window(const WarpingProfile& profile, double T_max, double lambda_max, double h);

/// Largest gap between consecutive values in [0, upper], with 0 and upper as sentinels.
double max_gap_statistic(std::span<const double> eigenvalues, double upper);

}  // namespace speclab
