#pragma once

// Warping profiles f(t) for model ends N x [0, inf) with metric f(t)^2 g_N + dt^2, the radial
// volume density f^{n-1}, and audits of the volume-growth and curvature conditions that the
// spectral results rely on. The cross-section volume is normalised to 1 throughout.

#include <memory>
#include <span>
#include <string>
#include <vector>

namespace speclab {

enum class ProfileFamily { Polynomial, QuasiPolynomial, Exponential, Tabulated };

std::string to_string(ProfileFamily family);

struct ProfileValues {
  double f = 0.0;
  double f_prime = 0.0;
  double f_double_prime = 0.0;
};

/// Logarithmic derivatives; these stay finite where f itself overflows.
struct LogProfile {
  double log_f = 0.0;
  double dlog_f = 0.0;     ///< f'/f
  double f2_over_f = 0.0;  ///< f''/f
};

class WarpingProfile {
 public:
  /// f(t) = (1 + t)^k, k >= 0.
  static WarpingProfile polynomial(double k, int n);
  /// f^{n-1}(t) = exp(beta ln^2(1 + t)), beta > 0.
  static WarpingProfile quasi_polynomial(double beta, int n);
  /// f(t) = e^{alpha t}, alpha > 0.
  static WarpingProfile exponential(double alpha, int n);
  /// Samples f(t0 + i*dt), interpolated by a clamped cubic spline. Requires t0 == 0 so the
  /// profile covers the whole radial half-line up to its last sample.
  static WarpingProfile tabulated(double dt, std::vector<double> samples, int n);

  ProfileFamily family() const { return family_; }
  int dimension() const { return n_; }
  /// k, beta or alpha; NaN for tabulated profiles.
  double parameter() const { return param_; }
  /// Right end of the domain (+inf for closed forms).
  double domain_end() const;

  ProfileValues eval(double t) const;
  LogProfile eval_log(double t) const;

  double log_density(double t) const;
  double density(double t) const;
  /// a(t) = (n-1) f'/(2f).
  double connection(double t) const;
  /// a'(t).
  double connection_prime(double t) const;
  /// Kernel-sector effective potential q = -(a' + a^2).
  double potential(double t) const;

  /// Nondecreasing on [0, t_end], tested on a uniform sample with the given step.
  bool nondecreasing_on(double t_end, double step) const;

  std::string describe() const;

 private:
  struct Spline;

  WarpingProfile(ProfileFamily family, double param, int n);
  void check_domain(double t) const;

  ProfileFamily family_;
  double param_;
  int n_;
  std::shared_ptr<const Spline> spline_;
};

ProfileValues eval_profile(const WarpingProfile& profile, double t);

/// rho(t) = f(t)^{n-1}.
double radial_density(const WarpingProfile& profile, double t);

/// Ric(dt, dt) = -(n-1) f''/f.
double radial_ricci(const WarpingProfile& profile, double t);

struct RicciAudit {
  std::vector<double> t;
  std::vector<double> delta;          ///< f''/f
  std::vector<double> delta_t2;       ///< delta * t^2
  bool delta_to_zero = false;         ///< |delta| tends to zero along the samples
};

RicciAudit ricci_audit(const WarpingProfile& profile, std::span<const double> t_list);

struct VolumeResult {
  double value = 0.0;
  bool accuracy_warning = false;  ///< |f'| h / f > 0.1 somewhere on the quadrature grid
};

/// V(r) = int_0^r rho by composite Simpson with step at most `step`.
VolumeResult ball_volume(const WarpingProfile& profile, double r, double step = 1e-2);

/// Cumulative log-volume table: stores log int_0^{t_i} rho on a uniform grid, accumulated in log
/// space so that exponentially growing densities do not overflow.
class VolumeTable {
 public:
  VolumeTable(const WarpingProfile& profile, double t_end, double step);

  /// log int_a^b rho for 0 <= a <= b <= t_end.
  double log_integral(double a, double b) const;
  /// log V(t0, r) with V(t0, r) = int_{max(0, t0-r)}^{t0+r} rho.
  double log_ball(double center, double r) const;
  /// log mu(t0)^2 = -log V(t0, 1).
  double log_mu_squared(double center) const { return -log_ball(center, 1.0); }

  double t_end() const { return t_end_; }
  double step() const { return step_; }
  bool accuracy_warning() const { return warning_; }

 private:
  double log_cumulative(double x) const;
  double log_panel(double a, double b) const;

  const WarpingProfile* profile_;
  double t_end_;
  double step_;
  bool warning_ = false;
  std::vector<double> log_cum_;
};

struct GrowthVerdict {
  double epsilon = 0.0;
  double fitted_C = 0.0;      ///< may be +inf when the true value overflows
  double log_fitted_C = 0.0;
  double r_max = 0.0;
  bool passed = false;
  double divergence_trend = 0.0;  ///< slope of log C vs log r_max over nested audits
  std::vector<double> nested_r_max;
  std::vector<double> nested_log_C;
};

struct SubexponentialOptions {
  double trend_tolerance = 0.05;
  double volume_step = 0.05;
};

/// Audits V(t0, r) <= C V(t0, 1) e^{eps r} over the given centers and radii. The audit is repeated
/// with r truncated at r_max/4, r_max/2 and r_max; a non-increasing fitted C passes.
GrowthVerdict check_subexponential(const WarpingProfile& profile, double epsilon,
                                   std::span<const double> r_grid, std::span<const double> center_grid,
                                   const SubexponentialOptions& options = {});

struct GrowthConditionResult {
  std::vector<double> t;
  std::vector<double> g;  ///< f^{n-1}(2t) / (t f^{n-1}(t))
  bool tends_to_zero = false;
};

GrowthConditionResult check_growth_condition(const WarpingProfile& profile, std::span<const double> t_list);

struct RadiusPair {
  double r = 0.0;
  double R = 0.0;
};

struct BishopResult {
  double K0 = 0.0;
  double C = 0.0;                 ///< V(x,R)/V(x,r) <= (R/r)^n e^{C sqrt(K0) R}
  bool passed = false;
  std::vector<double> nested_C;   ///< C over growing prefixes of the pair list
  double volcom3_C = 0.0;         ///< mu(y)^2 <= C mu(x)^2 e^{Cbar (sqrt(K0)+1) d}
  double volcom3_Cbar = 0.0;
  double volcom4_C = 0.0;         ///< V(x,r)^{-1} <= C mu(x)^2 max(r^{-n}, 1)
};

/// Throws PreconditionError naming the first sample t where Ric < -K0.
BishopResult bishop_check(const WarpingProfile& profile, double K0, std::span<const RadiusPair> pairs,
                          std::span<const double> centers, double volume_step = 0.05);

struct SturmIntegralResult {
  double beta = 0.0;
  std::vector<double> T_audit;
  std::vector<double> log_sup;  ///< log sup_{t0} int_0^T mu(t0) mu(s) e^{-beta|t0-s|} rho(s) ds
  bool finite = false;
};

struct SturmOptions {
  double T0 = 50.0;
  int doublings = 5;
  double step = 0.05;
  double tolerance = 1e-2;  ///< relative change across the last doubling
};

SturmIntegralResult sturm_integral(const WarpingProfile& profile, double beta,
                                   std::span<const double> center_grid, const SturmOptions& options = {});

}  // namespace speclab
