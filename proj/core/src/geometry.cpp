#include "speclab/geometry.hpp"

#include <algorithm>
#include <boost/math/interpolators/cardinal_cubic_b_spline.hpp>
#include <cmath>
#include <limits>
#include <sstream>

#include "speclab/errors.hpp"
#include "speclab/numeric.hpp"

namespace speclab {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

struct WarpingProfile::Spline {
  boost::math::interpolators::cardinal_cubic_b_spline<double> spline;
  double t_end;
};

std::string to_string(ProfileFamily family) {
  switch (family) {
    case ProfileFamily::Polynomial: return "polynomial";
    case ProfileFamily::QuasiPolynomial: return "quasi-polynomial";
    case ProfileFamily::Exponential: return "exponential";
    case ProfileFamily::Tabulated: return "tabulated";
  }
  return "unknown";
}

WarpingProfile::WarpingProfile(ProfileFamily family, double param, int n)
    : family_(family), param_(param), n_(n) {
  if (n < 2) throw DomainError("warping profile: dimension n must be >= 2");
}

WarpingProfile WarpingProfile::polynomial(double k, int n) {
  if (!(k >= 0.0) || !std::isfinite(k)) throw DomainError("polynomial profile: k must be finite and >= 0");
  return WarpingProfile(ProfileFamily::Polynomial, k, n);
}

WarpingProfile WarpingProfile::quasi_polynomial(double beta, int n) {
  if (!(beta > 0.0) || !std::isfinite(beta)) throw DomainError("quasi-polynomial profile: beta must be > 0");
  return WarpingProfile(ProfileFamily::QuasiPolynomial, beta, n);
}

WarpingProfile WarpingProfile::exponential(double alpha, int n) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw DomainError("exponential profile: alpha must be > 0");
  return WarpingProfile(ProfileFamily::Exponential, alpha, n);
}

WarpingProfile WarpingProfile::tabulated(double dt, std::vector<double> samples, int n) {
  if (!(dt > 0.0)) throw DomainError("tabulated profile: spacing must be > 0");
  if (samples.size() < 4) throw DomainError("tabulated profile: need at least 4 samples");
  for (double v : samples) {
    if (!(v > 0.0) || !std::isfinite(v)) throw DomainError("tabulated profile: samples must be finite and > 0");
  }
  const std::size_t last = samples.size() - 1;
  // Clamped end slopes from second-order one-sided differences.
  const double left = (-3.0 * samples[0] + 4.0 * samples[1] - samples[2]) / (2.0 * dt);
  const double right = (3.0 * samples[last] - 4.0 * samples[last - 1] + samples[last - 2]) / (2.0 * dt);
  WarpingProfile profile(ProfileFamily::Tabulated, std::numeric_limits<double>::quiet_NaN(), n);
  const double t_end = dt * static_cast<double>(last);
  profile.spline_ = std::make_shared<const Spline>(
      Spline{boost::math::interpolators::cardinal_cubic_b_spline<double>(samples.begin(), samples.end(), 0.0, dt, left, right), t_end});
  return profile;
}

double WarpingProfile::domain_end() const { return spline_ ? spline_->t_end : kInf; }

void WarpingProfile::check_domain(double t) const {
  if (!(t >= 0.0)) {
    std::ostringstream msg;
    msg << "warping profile evaluated at t = " << t << " < 0";
    throw DomainError(msg.str());
  }
  if (spline_ && t > spline_->t_end * (1.0 + 1e-14)) {
    std::ostringstream msg;
    msg << "tabulated profile evaluated at t = " << t << " beyond its last sample " << spline_->t_end;
    throw DomainError(msg.str());
  }
}

ProfileValues WarpingProfile::eval(double t) const {
  check_domain(t);
  switch (family_) {
    case ProfileFamily::Polynomial: {
      const double k = param_;
      const double base = 1.0 + t;
      const double f = std::pow(base, k);
      return {f, k * std::pow(base, k - 1.0), k * (k - 1.0) * std::pow(base, k - 2.0)};
    }
    case ProfileFamily::Exponential: {
      const double f = std::exp(param_ * t);
      return {f, param_ * f, param_ * param_ * f};
    }
    case ProfileFamily::QuasiPolynomial: {
      const LogProfile lp = eval_log(t);
      const double f = std::exp(lp.log_f);
      return {f, f * lp.dlog_f, f * lp.f2_over_f};
    }
    case ProfileFamily::Tabulated: {
      const double x = std::min(t, spline_->t_end);
      const double f = spline_->spline(x);
      if (!(f > 0.0)) {
        std::ostringstream msg;
        msg << "tabulated profile interpolates to a nonpositive value at t = " << t;
        throw DomainError(msg.str());
      }
      return {f, spline_->spline.prime(x), spline_->spline.double_prime(x)};
    }
  }
  return {};
}

LogProfile WarpingProfile::eval_log(double t) const {
  check_domain(t);
  switch (family_) {
    case ProfileFamily::Polynomial: {
      const double k = param_;
      const double base = 1.0 + t;
      return {k * std::log1p(t), k / base, k * (k - 1.0) / (base * base)};
    }
    case ProfileFamily::Exponential:
      return {param_ * t, param_, param_ * param_};
    case ProfileFamily::QuasiPolynomial: {
      const double g = param_ / static_cast<double>(n_ - 1);
      const double L = std::log1p(t);
      const double base = 1.0 + t;
      const double dlog = 2.0 * g * L / base;
      return {g * L * L, dlog, dlog * dlog + 2.0 * g * (1.0 - L) / (base * base)};
    }
    case ProfileFamily::Tabulated: {
      const ProfileValues v = eval(t);
      return {std::log(v.f), v.f_prime / v.f, v.f_double_prime / v.f};
    }
  }
  return {};
}

double WarpingProfile::log_density(double t) const {
  return static_cast<double>(n_ - 1) * eval_log(t).log_f;
}

double WarpingProfile::density(double t) const {
  if (family_ == ProfileFamily::Polynomial) {
    check_domain(t);
    return std::pow(1.0 + t, param_ * static_cast<double>(n_ - 1));
  }
  return std::exp(log_density(t));
}

double WarpingProfile::connection(double t) const {
  return 0.5 * static_cast<double>(n_ - 1) * eval_log(t).dlog_f;
}

double WarpingProfile::connection_prime(double t) const {
  const LogProfile lp = eval_log(t);
  return 0.5 * static_cast<double>(n_ - 1) * (lp.f2_over_f - lp.dlog_f * lp.dlog_f);
}

double WarpingProfile::potential(double t) const {
  const LogProfile lp = eval_log(t);
  const double half = 0.5 * static_cast<double>(n_ - 1);
  const double a = half * lp.dlog_f;
  const double a_prime = half * (lp.f2_over_f - lp.dlog_f * lp.dlog_f);
  return -(a_prime + a * a);
}

bool WarpingProfile::nondecreasing_on(double t_end, double step) const {
  const double end = std::min(t_end, domain_end());
  double prev = eval_log(0.0).log_f;
  for (double t = step; t <= end + 0.5 * step; t += step) {
    const double cur = eval_log(std::min(t, end)).log_f;
    if (cur < prev - 1e-14 * std::max(1.0, std::abs(prev))) return false;
    prev = cur;
  }
  return true;
}

std::string WarpingProfile::describe() const {
  std::ostringstream out;
  out << to_string(family_);
  switch (family_) {
    case ProfileFamily::Polynomial: out << "(k=" << param_ << ")"; break;
    case ProfileFamily::QuasiPolynomial: out << "(beta=" << param_ << ")"; break;
    case ProfileFamily::Exponential: out << "(alpha=" << param_ << ")"; break;
    case ProfileFamily::Tabulated: out << "(t_end=" << domain_end() << ")"; break;
  }
  out << ", n=" << n_;
  return out.str();
}

ProfileValues eval_profile(const WarpingProfile& profile, double t) { return profile.eval(t); }

double radial_density(const WarpingProfile& profile, double t) { return profile.density(t); }

double radial_ricci(const WarpingProfile& profile, double t) {
  return -static_cast<double>(profile.dimension() - 1) * profile.eval_log(t).f2_over_f;
}

RicciAudit ricci_audit(const WarpingProfile& profile, std::span<const double> t_list) {
  RicciAudit audit;
  std::vector<double> magnitude;
  for (double t : t_list) {
    const double delta = profile.eval_log(t).f2_over_f;
    audit.t.push_back(t);
    audit.delta.push_back(delta);
    audit.delta_t2.push_back(delta * t * t);
    magnitude.push_back(std::abs(delta));
  }
  const bool identically_zero =
      std::all_of(magnitude.begin(), magnitude.end(), [](double v) { return v == 0.0; });
  audit.delta_to_zero = !magnitude.empty() && (identically_zero || trends_to_zero(magnitude));
  return audit;
}

VolumeResult ball_volume(const WarpingProfile& profile, double r, double step) {
  if (!(r >= 0.0)) throw DomainError("ball_volume: radius must be >= 0");
  if (!(step > 0.0)) throw DomainError("ball_volume: step must be > 0");
  if (r == 0.0) return {0.0, false};
  std::size_t panels = static_cast<std::size_t>(std::ceil(r / step));
  panels += panels % 2;
  const double h = r / static_cast<double>(panels);
  std::vector<double> values(panels + 1);
  bool warning = false;
  for (std::size_t i = 0; i <= panels; ++i) {
    const double t = h * static_cast<double>(i);
    values[i] = profile.density(t);
    if (std::abs(profile.eval_log(t).dlog_f) * h > 0.1) warning = true;
  }
  return {simpson(values, h), warning};
}

VolumeTable::VolumeTable(const WarpingProfile& profile, double t_end, double step)
    : profile_(&profile), t_end_(t_end), step_(step) {
  if (!(t_end > 0.0) || !(step > 0.0)) throw DomainError("VolumeTable: extent and step must be > 0");
  const auto nodes = static_cast<std::size_t>(std::ceil(t_end / step));
  t_end_ = step * static_cast<double>(nodes);
  log_cum_.assign(nodes + 1, -kInf);
  for (std::size_t i = 0; i < nodes; ++i) {
    const double a = step * static_cast<double>(i);
    log_cum_[i + 1] = log_add_exp(log_cum_[i], log_panel(a, a + step));
    if (std::abs(profile.eval_log(a).dlog_f) * step > 0.1) warning_ = true;
  }
}

double VolumeTable::log_panel(double a, double b) const {
  if (b <= a) return -kInf;
  const double la = profile_->log_density(a);
  const double lm = profile_->log_density(0.5 * (a + b));
  const double lb = profile_->log_density(b);
  const double peak = std::max({la, lm, lb});
  const double sum = std::exp(la - peak) + 4.0 * std::exp(lm - peak) + std::exp(lb - peak);
  return peak + std::log(sum * (b - a) / 6.0);
}

double VolumeTable::log_cumulative(double x) const {
  if (x < 0.0 || x > t_end_ * (1.0 + 1e-14)) {
    std::ostringstream msg;
    msg << "VolumeTable: abscissa " << x << " outside [0, " << t_end_ << "]";
    throw DomainError(msg.str());
  }
  auto i = static_cast<std::size_t>(std::floor(x / step_));
  i = std::min(i, log_cum_.size() - 1);
  const double node = step_ * static_cast<double>(i);
  if (x <= node) return log_cum_[i];
  return log_add_exp(log_cum_[i], log_panel(node, x));
}

double VolumeTable::log_integral(double a, double b) const {
  if (b < a) throw DomainError("VolumeTable: reversed interval");
  return log_sub_exp(log_cumulative(b), log_cumulative(a));
}

double VolumeTable::log_ball(double center, double r) const {
  return log_integral(std::max(0.0, center - r), center + r);
}

GrowthVerdict check_subexponential(const WarpingProfile& profile, double epsilon,
                                   std::span<const double> r_grid, std::span<const double> center_grid,
                                   const SubexponentialOptions& options) {
  if (!(epsilon > 0.0)) throw DomainError("check_subexponential: epsilon must be > 0");
  if (r_grid.empty() || center_grid.empty()) throw DomainError("check_subexponential: empty grid");
  std::vector<double> radii(r_grid.begin(), r_grid.end());
  std::sort(radii.begin(), radii.end());
  const double r_max = radii.back();
  const double c_max = *std::max_element(center_grid.begin(), center_grid.end());
  const VolumeTable table(profile, c_max + std::max(r_max, 1.0), options.volume_step);

  // Running maximum over radii of max_{t0} log(V(t0,r) / (V(t0,1) e^{eps r})).
  std::vector<double> running(radii.size());
  double best = -kInf;
  for (std::size_t i = 0; i < radii.size(); ++i) {
    const double r = radii[i];
    for (double t0 : center_grid) {
      const double excess = table.log_ball(t0, r) - table.log_ball(t0, 1.0) - epsilon * r;
      best = std::max(best, excess);
    }
    running[i] = best;
  }

  GrowthVerdict verdict;
  verdict.epsilon = epsilon;
  verdict.r_max = r_max;
  for (double level : {0.25 * r_max, 0.5 * r_max, r_max}) {
    const auto it = std::upper_bound(radii.begin(), radii.end(), level * (1.0 + 1e-12));
    if (it == radii.begin()) continue;
    const auto idx = static_cast<std::size_t>(std::distance(radii.begin(), it)) - 1;
    verdict.nested_r_max.push_back(level);
    verdict.nested_log_C.push_back(std::max(0.0, running[idx]));
  }
  verdict.log_fitted_C = std::max(0.0, running.back());
  verdict.fitted_C = std::exp(verdict.log_fitted_C);
  if (verdict.nested_r_max.size() >= 2) {
    std::vector<double> lx;
    for (double v : verdict.nested_r_max) lx.push_back(std::log(v));
    verdict.divergence_trend = fit_line(lx, verdict.nested_log_C).slope;
  }
  verdict.passed = std::isfinite(verdict.fitted_C) && verdict.divergence_trend <= options.trend_tolerance;
  return verdict;
}

GrowthConditionResult check_growth_condition(const WarpingProfile& profile, std::span<const double> t_list) {
  GrowthConditionResult result;
  const double exponent = static_cast<double>(profile.dimension() - 1);
  for (double t : t_list) {
    if (!(t > 0.0)) throw DomainError("check_growth_condition: t must be > 0");
    const double log_ratio = exponent * (profile.eval_log(2.0 * t).log_f - profile.eval_log(t).log_f);
    result.t.push_back(t);
    result.g.push_back(std::exp(log_ratio - std::log(t)));
  }
  result.tends_to_zero = trends_to_zero(result.g);
  return result;
}

BishopResult bishop_check(const WarpingProfile& profile, double K0, std::span<const RadiusPair> pairs,
                          std::span<const double> centers, double volume_step) {
  if (!(K0 >= 0.0)) throw DomainError("bishop_check: K0 must be >= 0");
  if (pairs.empty() || centers.empty()) throw DomainError("bishop_check: empty audit set");
  double R_max = 0.0;
  for (const auto& p : pairs) {
    if (!(p.r > 0.0) || !(p.R >= p.r)) throw DomainError("bishop_check: pairs need 0 < r <= R");
    R_max = std::max(R_max, p.R);
  }
  const double c_max = *std::max_element(centers.begin(), centers.end());
  const double t_end = c_max + std::max(R_max, 1.0);
  for (double t = 0.0; t <= t_end; t += volume_step) {
    if (radial_ricci(profile, t) < -K0 - 1e-12 * std::max(1.0, K0)) {
      std::ostringstream msg;
      msg << "bishop_check: Ric(dt,dt) = " << radial_ricci(profile, t) << " < -K0 = " << -K0 << " at t = " << t;
      throw PreconditionError(msg.str());
    }
  }
  const VolumeTable table(profile, t_end, volume_step);
  const double n = static_cast<double>(profile.dimension());
  const double sqrtK0 = std::sqrt(K0);

  std::vector<RadiusPair> sorted(pairs.begin(), pairs.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const RadiusPair& a, const RadiusPair& b) { return a.R < b.R; });

  BishopResult result;
  result.K0 = K0;
  std::vector<double> running;
  double best = 0.0;
  for (const auto& p : sorted) {
    for (double x : centers) {
      const double excess = table.log_ball(x, p.R) - table.log_ball(x, p.r) - n * std::log(p.R / p.r);
      if (excess <= 1e-12) continue;
      best = std::max(best, sqrtK0 > 0.0 ? excess / (sqrtK0 * p.R) : kInf);
    }
    running.push_back(best);
  }
  result.C = running.back();
  const std::size_t count = running.size();
  for (std::size_t prefix : {std::max<std::size_t>(1, count / 2), std::max<std::size_t>(1, 3 * count / 4), count}) {
    result.nested_C.push_back(running[prefix - 1]);
  }
  const double prev = result.nested_C[result.nested_C.size() - 2];
  result.passed = std::isfinite(result.C) && result.C <= 1.1 * prev + 1e-12;

  // mu(y)^2 <= C mu(x)^2 e^{Cbar (sqrt(K0)+1) d(x,y)}
  const double rate = sqrtK0 + 1.0;
  std::vector<double> log_mu2(centers.size());
  for (std::size_t i = 0; i < centers.size(); ++i) log_mu2[i] = table.log_mu_squared(centers[i]);
  double cbar = 0.0;
  for (std::size_t i = 0; i < centers.size(); ++i) {
    for (std::size_t j = 0; j < centers.size(); ++j) {
      const double d = std::abs(centers[i] - centers[j]);
      if (d < 1.0) continue;
      cbar = std::max(cbar, (log_mu2[j] - log_mu2[i]) / (rate * d));
    }
  }
  double log_c3 = 0.0;
  for (std::size_t i = 0; i < centers.size(); ++i) {
    for (std::size_t j = 0; j < centers.size(); ++j) {
      const double d = std::abs(centers[i] - centers[j]);
      log_c3 = std::max(log_c3, log_mu2[j] - log_mu2[i] - cbar * rate * d);
    }
  }
  result.volcom3_Cbar = cbar;
  result.volcom3_C = std::exp(log_c3);

  // V(x,r)^{-1} <= C mu(x)^2 max(r^{-n}, 1)
  double log_c4 = -kInf;
  for (const auto& p : sorted) {
    for (double r : {p.r, p.R}) {
      for (std::size_t i = 0; i < centers.size(); ++i) {
        const double log_sup = r < 1.0 ? -n * std::log(r) : 0.0;
        log_c4 = std::max(log_c4, -table.log_ball(centers[i], r) - log_mu2[i] - log_sup);
      }
    }
  }
  result.volcom4_C = std::exp(log_c4);
  return result;
}

SturmIntegralResult sturm_integral(const WarpingProfile& profile, double beta, std::span<const double> center_grid,
                                   const SturmOptions& options) {
  if (!(beta > 0.0)) throw DomainError("sturm_integral: beta must be > 0");
  if (center_grid.empty()) throw DomainError("sturm_integral: empty center grid");
  if (options.doublings < 1) throw DomainError("sturm_integral: need at least one doubling");
  const double T_final = options.T0 * std::ldexp(1.0, options.doublings);
  const double c_max = *std::max_element(center_grid.begin(), center_grid.end());
  const VolumeTable table(profile, std::max(T_final, c_max) + 1.0, options.step);

  SturmIntegralResult result;
  result.beta = beta;
  for (int level = 0; level <= options.doublings; ++level) {
    const double T = options.T0 * std::ldexp(1.0, level);
    std::size_t panels = static_cast<std::size_t>(std::ceil(T / options.step));
    panels += panels % 2;
    const double h = T / static_cast<double>(panels);
    std::vector<double> s(panels + 1);
    std::vector<double> base(panels + 1);
    for (std::size_t i = 0; i <= panels; ++i) {
      s[i] = h * static_cast<double>(i);
      base[i] = 0.5 * table.log_mu_squared(s[i]) + profile.log_density(s[i]);
    }
    double sup = -kInf;
    std::vector<double> integrand(panels + 1);
    for (double t0 : center_grid) {
      const double log_mu_x = 0.5 * table.log_mu_squared(t0);
      for (std::size_t i = 0; i <= panels; ++i) integrand[i] = log_mu_x + base[i] - beta * std::abs(t0 - s[i]);
      sup = std::max(sup, log_simpson(integrand, h));
    }
    result.T_audit.push_back(T);
    result.log_sup.push_back(sup);
  }
  const std::size_t k = result.log_sup.size();
  result.finite = std::abs(result.log_sup[k - 1] - result.log_sup[k - 2]) < std::log1p(options.tolerance);
  return result;
}

}  // namespace speclab
