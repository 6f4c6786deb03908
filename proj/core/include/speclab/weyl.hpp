#pragma once

// Approximate eigenspinor families on the warped end and the quotients that certify spectrum:
// the cut-off plane waves eta_T e^{-i lambda t}, their exactly conjugated complex-z variants, the
// oscillating chi-family used for the generalized criterion, and the product-rule identity for D^2.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "speclab/geometry.hpp"
#include "speclab/grid.hpp"
#include "speclab/operators.hpp"

namespace speclab {

/// Quintic smoothstep 10s^3 - 15s^4 + 6s^5 clamped to [0, 1], and its derivatives.
double smoothstep(double s);
double smoothstep_slope(double s);
double smoothstep_curvature(double s);

inline constexpr double kSmoothstepMaxSlope = 15.0 / 8.0;
/// max |S''| = 10 / sqrt(3).
inline constexpr double kSmoothstepMaxCurvature = 5.773502691896258;

/// eta_T: 0 outside [T, 4T], 1 on [2T, 3T], smoothstep ramps in between.
struct CutoffEtaT {
  double T = 0.0;
  std::vector<double> values;
  std::vector<double> slopes;
};

double eta_cutoff(double t, double T);
double eta_cutoff_slope(double t, double T);
CutoffEtaT make_eta_cutoff(double T, const RadialGrid& grid);

/// chi_i(t / R): plateau [x, y], ramps of width R on either side, support [x - R, y + R].
struct ChiParameters {
  double R = 0.0;
  double x = 0.0;
  double y = 0.0;
};

/// Default schedule R = 2^i, x = x_factor R, y = y_factor x.
ChiParameters chi_schedule(int i, double x_factor = 3.0, double y_factor = 2.0);
/// Throws PreconditionError unless x > 2R and y > x + 2R.
void validate_chi(const ChiParameters& chi);

struct CutoffChi {
  ChiParameters params;
  std::vector<double> values;
  std::vector<double> d1;  ///< derivative in t
  std::vector<double> d2;  ///< second derivative in t
};

double chi_cutoff(double t, const ChiParameters& chi);
CutoffChi make_chi_cutoff(const ChiParameters& chi, const RadialGrid& grid);

/// u_j = eta_T(t_j) e^{-i lambda t_j}. Requires 4T < T_max.
RadialSection warped_test_spinor(double lambda, double T, const RadialGrid& grid, const WarpingProfile& profile);

/// Radial coefficient of (D - lambda) psi_T: i (a eta_T + eta_T') e^{-i lambda t}.
RadialSection dirac_residual_exact(double lambda, double T, const RadialGrid& grid, const WarpingProfile& profile);

struct WeylQuotient {
  double quotient = 0.0;
  std::optional<double> reference_bound;  ///< 7 rho(4T) / (T rho(2T)), p = 1 and nondecreasing f only
  std::string notice;
};

WeylQuotient weyl_quotient_p(double lambda, double T, double p, const RadialGrid& grid,
                             const WarpingProfile& profile);

/// 7 rho(4T) / (T rho(2T)).
double weyl_reference_bound(const WarpingProfile& profile, double T);

/// u = eta_T rho^{-1/2} e^{-i s z t}; then (D_s - z) u = s i eta_T' rho^{-1/2} e^{-i s z t}.
/// Values are stored divided by e^{log_scale} so that the largest |u_j| is 1.
struct ConjugatedSpinor {
  RadialSection section;
  RadialSection residual;
  double log_scale = 0.0;
};

ConjugatedSpinor conjugated_test_spinor(Complex z, double T, const RadialGrid& grid, const WarpingProfile& profile,
                                        int sign = 1);

/// ||(D_s - z) u||_p / ||u||_p for the conjugated spinor, evaluated from log-magnitudes.
double conjugated_quotient(Complex z, double T, double p, const RadialGrid& grid, const WarpingProfile& profile,
                           int sign = 1);

struct QuotientTrace {
  std::vector<double> parameter;  ///< T (or R) values
  std::vector<double> quotient;
  std::vector<double> bound;      ///< NaN where no bound applies
  double slope = 0.0;             ///< log-log slope of quotient against parameter
};

enum class RegionClass { Decays, Stalls };
const char* to_string(RegionClass c);

struct RegionCell {
  Complex z;
  std::vector<double> quotients;
  double slope = 0.0;
  bool monotone_tail = false;
  RegionClass classification = RegionClass::Stalls;
};

struct RegionMapOptions {
  double slope_threshold = -0.5;
  int sign = 1;
};

struct RegionMap {
  double p = 1.0;
  std::vector<double> T_list;
  std::vector<RegionCell> cells;
};

/// "decays" iff the log-log slope of Q_p against T is <= threshold and the second half of the
/// trace is nonincreasing. Fewer than four T values is inconclusive and throws PreconditionError.
RegionMap spectral_region_map(const WarpingProfile& profile, double p, std::span<const Complex> z_grid,
                              std::span<const double> T_list, const RadialGrid& grid,
                              const RegionMapOptions& options = {});

RegionCell classify_region_cell(Complex z, std::vector<double> quotients, std::span<const double> T_list,
                                const RegionMapOptions& options = {});

/// u_j = chi(t_j) e^{i sqrt(lambda) t_j}. Requires y + R < T_max.
RadialSection build_eta_i(double lambda, const ChiParameters& chi, const RadialGrid& grid);

/// ||psi||_inf ||(D^2 - lambda) psi||_1 / ||psi||_2^2 with D^2 from finite differences. psi must
/// vanish at both end nodes.
double generalized_weyl_quotient(double lambda, const RadialSection& section, const WarpingProfile& profile);
/// Same functional with D^2 replaced by an assembled operator.
double generalized_weyl_quotient(double lambda, const RadialSection& section, const ReducedOperator& op);

/// Terms of ||(D^2 - lambda)(eta phi)||_1 / ||eta||_2^2 <= sup|D^2 phi| + 1/R + ||(Delta - lambda) eta||_1 / ||eta||_2^2
/// for the chi-family with unit-constant constants.
struct WeylDecomposition {
  double potential_sup = 0.0;
  double inverse_radius = 0.0;
  double laplace_ratio = 0.0;
  double bound = 0.0;
};

WeylDecomposition weyl_decomposition(double lambda, const ChiParameters& chi, const WarpingProfile& profile,
                                     const RadialGrid& grid);

/// max over nodes 1..m-2 of |(D^2 - lambda)(eta phi) - [eta D^2 phi - 2 eta' phi' + (Delta eta - lambda eta) phi]|.
double leibniz_identity_check(std::span<const double> eta, const RadialSection& phi, double lambda,
                              const WarpingProfile& profile);

struct HarmonicFamily {
  RadialSection section;  ///< 1 on nodes t >= R, 0 below
  double certificate = 0.0;  ///< sup_{t >= R} |q(t)|
};

HarmonicFamily asymptotically_harmonic_family(const WarpingProfile& profile, double R, const RadialGrid& grid);

struct WangResult {
  std::vector<double> R;
  std::vector<double> laplace_ratio;    ///< ||(Delta - lambda) eta_R||_1 / ||eta_R||_1
  std::vector<double> gradient_ratio;   ///< ||d|eta_R|/dt||_1 / ||eta_R||_1 (cut-off amplitude)
  std::vector<double> phase_gradient_ratio;  ///< ||eta_R'||_1 / ||eta_R||_1 including the oscillation
  double laplace_slope = 0.0;
  double gradient_slope = 0.0;
  bool within_window = false;  ///< both slopes in [-1.3, -0.7]
  bool passed = false;         ///< both slopes <= -0.7
};

WangResult wang_scaling_check(double lambda, std::span<const double> R_list, const WarpingProfile& profile,
                              const RadialGrid& grid);

}  // namespace speclab
