#include "speclab/weyl.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "speclab/errors.hpp"
#include "speclab/numeric.hpp"

namespace speclab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr Complex kI{0.0, 1.0};

double clamp01(double s) { return std::clamp(s, 0.0, 1.0); }

void check_eta_support(double T, const RadialGrid& grid) {
  if (!(T > 0.0)) throw DomainError("cut-off scale T must be positive");
  if (!(4.0 * T < grid.t_max())) {
    std::ostringstream msg;
    msg << "support [T, 4T] = [" << T << ", " << 4.0 * T << "] exceeds the grid (T_max = " << grid.t_max() << ")";
    throw PreconditionError(msg.str());
  }
}

std::vector<double> log_density_on(const RadialGrid& grid, const WarpingProfile& profile) {
  std::vector<double> out(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) out[j] = profile.log_density(grid.node(j));
  return out;
}

/// log (sum_j |v_j|^p rho_j h)^{1/p} from log|v_j|; p = inf gives max log|v_j|.
double log_norm_from_logs(std::span<const double> log_mag, std::span<const double> log_rho, double h, double p) {
  if (std::isinf(p)) {
    double peak = -kInf;
    for (double v : log_mag) peak = std::max(peak, v);
    return peak;
  }
  std::vector<double> terms;
  terms.reserve(log_mag.size());
  for (std::size_t j = 0; j < log_mag.size(); ++j) {
    if (log_mag[j] > -kInf) terms.push_back(p * log_mag[j] + log_rho[j]);
  }
  if (terms.empty()) return -kInf;
  return (log_sum_exp(terms) + std::log(h)) / p;
}

double safe_log(double v) { return v > 0.0 ? std::log(v) : -kInf; }

std::vector<double> central_derivative(std::span<const double> v, double h) {
  const std::size_t m = v.size();
  std::vector<double> d(m);
  for (std::size_t j = 1; j + 1 < m; ++j) d[j] = (v[j + 1] - v[j - 1]) / (2.0 * h);
  d[0] = (-3.0 * v[0] + 4.0 * v[1] - v[2]) / (2.0 * h);
  d[m - 1] = (3.0 * v[m - 1] - 4.0 * v[m - 2] + v[m - 3]) / (2.0 * h);
  return d;
}

}  // namespace

double smoothstep(double s) {
  s = clamp01(s);
  return s * s * s * (10.0 + s * (-15.0 + 6.0 * s));
}

double smoothstep_slope(double s) {
  if (s <= 0.0 || s >= 1.0) return 0.0;
  const double w = s * (1.0 - s);
  return 30.0 * w * w;
}

double smoothstep_curvature(double s) {
  if (s <= 0.0 || s >= 1.0) return 0.0;
  return 60.0 * s * (1.0 - s) * (1.0 - 2.0 * s);
}

double eta_cutoff(double t, double T) {
  if (t <= T || t >= 4.0 * T) return 0.0;
  if (t < 2.0 * T) return smoothstep((t - T) / T);
  if (t <= 3.0 * T) return 1.0;
  return smoothstep((4.0 * T - t) / T);
}

double eta_cutoff_slope(double t, double T) {
  if (t <= T || t >= 4.0 * T) return 0.0;
  if (t < 2.0 * T) return smoothstep_slope((t - T) / T) / T;
  if (t <= 3.0 * T) return 0.0;
  return -smoothstep_slope((4.0 * T - t) / T) / T;
}

CutoffEtaT make_eta_cutoff(double T, const RadialGrid& grid) {
  check_eta_support(T, grid);
  CutoffEtaT cut;
  cut.T = T;
  cut.values.resize(grid.size());
  cut.slopes.resize(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    cut.values[j] = eta_cutoff(grid.node(j), T);
    cut.slopes[j] = eta_cutoff_slope(grid.node(j), T);
  }
  return cut;
}

ChiParameters chi_schedule(int i, double x_factor, double y_factor) {
  ChiParameters chi;
  chi.R = std::ldexp(1.0, i);
  chi.x = x_factor * chi.R;
  chi.y = y_factor * chi.x;
  validate_chi(chi);
  return chi;
}

void validate_chi(const ChiParameters& chi) {
  if (!(chi.R > 0.0)) throw PreconditionError("chi cut-off: R must be positive");
  if (!(chi.x > 2.0 * chi.R)) {
    std::ostringstream msg;
    msg << "chi cut-off requires x > 2R (x = " << chi.x << ", R = " << chi.R << ")";
    throw PreconditionError(msg.str());
  }
  if (!(chi.y > chi.x + 2.0 * chi.R)) {
    std::ostringstream msg;
    msg << "chi cut-off requires y > x + 2R (x = " << chi.x << ", y = " << chi.y << ", R = " << chi.R << ")";
    throw PreconditionError(msg.str());
  }
}

double chi_cutoff(double t, const ChiParameters& chi) {
  const double start = chi.x - chi.R;
  const double stop = chi.y + chi.R;
  if (t <= start || t >= stop) return 0.0;
  if (t < chi.x) return smoothstep((t - start) / chi.R);
  if (t <= chi.y) return 1.0;
  return smoothstep((stop - t) / chi.R);
}

CutoffChi make_chi_cutoff(const ChiParameters& chi, const RadialGrid& grid) {
  validate_chi(chi);
  if (!(chi.y + chi.R < grid.t_max())) {
    std::ostringstream msg;
    msg << "chi cut-off support ends at " << chi.y + chi.R << ", beyond T_max = " << grid.t_max();
    throw PreconditionError(msg.str());
  }
  const double start = chi.x - chi.R;
  const double stop = chi.y + chi.R;
  CutoffChi cut;
  cut.params = chi;
  const std::size_t m = grid.size();
  cut.values.assign(m, 0.0);
  cut.d1.assign(m, 0.0);
  cut.d2.assign(m, 0.0);
  for (std::size_t j = 0; j < m; ++j) {
    const double t = grid.node(j);
    cut.values[j] = chi_cutoff(t, chi);
    if (t > start && t < chi.x) {
      const double s = (t - start) / chi.R;
      cut.d1[j] = smoothstep_slope(s) / chi.R;
      cut.d2[j] = smoothstep_curvature(s) / (chi.R * chi.R);
    } else if (t > chi.y && t < stop) {
      const double s = (stop - t) / chi.R;
      cut.d1[j] = -smoothstep_slope(s) / chi.R;
      cut.d2[j] = smoothstep_curvature(s) / (chi.R * chi.R);
    }
  }
  return cut;
}

RadialSection warped_test_spinor(double lambda, double T, const RadialGrid& grid, const WarpingProfile& /*profile*/) {
  check_eta_support(T, grid);
  RadialSection out(grid);
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double t = grid.node(j);
    out.values[j] = eta_cutoff(t, T) * std::exp(-kI * (lambda * t));
  }
  return out;
}

RadialSection dirac_residual_exact(double lambda, double T, const RadialGrid& grid, const WarpingProfile& profile) {
  check_eta_support(T, grid);
  RadialSection out(grid);
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double t = grid.node(j);
    const double eta = eta_cutoff(t, T);
    const double slope = eta_cutoff_slope(t, T);
    if (eta == 0.0 && slope == 0.0) continue;
    out.values[j] = kI * (profile.connection(t) * eta + slope) * std::exp(-kI * (lambda * t));
  }
  return out;
}

double weyl_reference_bound(const WarpingProfile& profile, double T) {
  return std::exp(std::log(7.0) + profile.log_density(4.0 * T) - std::log(T) - profile.log_density(2.0 * T));
}

WeylQuotient weyl_quotient_p(double lambda, double T, double p, const RadialGrid& grid,
                             const WarpingProfile& profile) {
  if (!(p >= 1.0)) throw DomainError("weyl_quotient_p: p must be >= 1");
  const auto psi = warped_test_spinor(lambda, T, grid, profile);
  const auto residual = dirac_residual_exact(lambda, T, grid, profile);
  const auto log_rho = log_density_on(grid, profile);
  WeylQuotient out;
  out.quotient = std::exp(log_weighted_norm(residual.values, log_rho, grid.h(), p) -
                          log_weighted_norm(psi.values, log_rho, grid.h(), p));
  if (p == 1.0) {
    if (profile.nondecreasing_on(4.0 * T, grid.h())) {
      out.reference_bound = weyl_reference_bound(profile, T);
    } else {
      out.notice = "bound suppressed: profile is not nondecreasing on [0, 4T]";
    }
  }
  return out;
}

ConjugatedSpinor conjugated_test_spinor(Complex z, double T, const RadialGrid& grid, const WarpingProfile& profile,
                                        int sign) {
  if (sign != 1 && sign != -1) throw DomainError("sector sign must be +1 or -1");
  check_eta_support(T, grid);
  const std::size_t m = grid.size();
  const double s = static_cast<double>(sign);
  // e^{-i s z t} = e^{s Im(z) t} e^{-i s Re(z) t}
  std::vector<double> log_u(m, -kInf), log_r(m, -kInf), phase(m, 0.0);
  double shift = -kInf;
  for (std::size_t j = 0; j < m; ++j) {
    const double t = grid.node(j);
    const double eta = eta_cutoff(t, T);
    const double slope = eta_cutoff_slope(t, T);
    const double base = -0.5 * profile.log_density(t) + s * z.imag() * t;
    phase[j] = -s * z.real() * t;
    log_u[j] = safe_log(eta) + base;
    log_r[j] = safe_log(std::abs(slope)) + base;
    shift = std::max(shift, log_u[j]);
  }
  ConjugatedSpinor out{RadialSection(grid), RadialSection(grid), shift};
  for (std::size_t j = 0; j < m; ++j) {
    const Complex rotation = std::polar(1.0, phase[j]);
    if (log_u[j] > -kInf) out.section.values[j] = std::exp(log_u[j] - shift) * rotation;
    if (log_r[j] > -kInf) {
      const double slope = eta_cutoff_slope(grid.node(j), T);
      out.residual.values[j] = s * kI * std::copysign(std::exp(log_r[j] - shift), slope) * rotation;
    }
  }
  return out;
}

double conjugated_quotient(Complex z, double T, double p, const RadialGrid& grid, const WarpingProfile& profile,
                           int sign) {
  if (sign != 1 && sign != -1) throw DomainError("sector sign must be +1 or -1");
  if (!(p >= 1.0)) throw DomainError("conjugated_quotient: p must be >= 1");
  check_eta_support(T, grid);
  const std::size_t m = grid.size();
  const double s = static_cast<double>(sign);
  std::vector<double> log_u(m), log_r(m), log_rho(m);
  for (std::size_t j = 0; j < m; ++j) {
    const double t = grid.node(j);
    log_rho[j] = profile.log_density(t);
    const double base = -0.5 * log_rho[j] + s * z.imag() * t;
    log_u[j] = safe_log(eta_cutoff(t, T)) + base;
    log_r[j] = safe_log(std::abs(eta_cutoff_slope(t, T))) + base;
  }
  return std::exp(log_norm_from_logs(log_r, log_rho, grid.h(), p) - log_norm_from_logs(log_u, log_rho, grid.h(), p));
}

const char* to_string(RegionClass c) { return c == RegionClass::Decays ? "decays" : "stalls"; }

RegionCell classify_region_cell(Complex z, std::vector<double> quotients, std::span<const double> T_list,
                                const RegionMapOptions& options) {
  if (T_list.size() < 4 || quotients.size() != T_list.size()) {
    throw PreconditionError("region map inconclusive: need at least four T values");
  }
  RegionCell cell;
  cell.z = z;
  cell.quotients = std::move(quotients);
  cell.slope = loglog_slope(T_list, cell.quotients);
  const std::size_t tail_start = cell.quotients.size() / 2;
  cell.monotone_tail = true;
  for (std::size_t i = tail_start + 1; i < cell.quotients.size(); ++i) {
    if (cell.quotients[i] > cell.quotients[i - 1]) cell.monotone_tail = false;
  }
  cell.classification = (cell.slope <= options.slope_threshold && cell.monotone_tail) ? RegionClass::Decays
                                                                                       : RegionClass::Stalls;
  return cell;
}

RegionMap spectral_region_map(const WarpingProfile& profile, double p, std::span<const Complex> z_grid,
                              std::span<const double> T_list, const RadialGrid& grid,
                              const RegionMapOptions& options) {
  if (T_list.size() < 4) throw PreconditionError("region map inconclusive: need at least four T values");
  for (std::size_t i = 1; i < T_list.size(); ++i) {
    if (!(T_list[i] > T_list[i - 1])) throw PreconditionError("region map: T_list must be increasing");
  }
  RegionMap map;
  map.p = p;
  map.T_list.assign(T_list.begin(), T_list.end());
  for (const Complex& z : z_grid) {
    std::vector<double> q;
    q.reserve(T_list.size());
    for (double T : T_list) q.push_back(conjugated_quotient(z, T, p, grid, profile, options.sign));
    map.cells.push_back(classify_region_cell(z, std::move(q), T_list, options));
  }
  return map;
}

RadialSection build_eta_i(double lambda, const ChiParameters& chi, const RadialGrid& grid) {
  if (!(lambda >= 0.0)) throw DomainError("build_eta_i: lambda must be >= 0");
  const auto cut = make_chi_cutoff(chi, grid);
  const double k = std::sqrt(lambda);
  RadialSection out(grid);
  for (std::size_t j = 0; j < grid.size(); ++j) {
    if (cut.values[j] != 0.0) out.values[j] = cut.values[j] * std::exp(kI * (k * grid.node(j)));
  }
  return out;
}

namespace {

double weyl_functional(std::span<const Complex> psi, std::span<const Complex> residual,
                       std::span<const double> log_rho, double h) {
  const double log_sup = log_weighted_norm(psi, log_rho, h, kInf);
  if (log_sup == -kInf) throw PreconditionError("generalized Weyl quotient of the zero section");
  const double log_l1 = log_weighted_norm(residual, log_rho, h, 1.0);
  const double log_l2 = log_weighted_norm(psi, log_rho, h, 2.0);
  return std::exp(log_sup + log_l1 - 2.0 * log_l2);
}

}  // namespace

double generalized_weyl_quotient(double lambda, const RadialSection& section, const WarpingProfile& profile) {
  const auto& values = section.values;
  if (std::abs(values.front()) != 0.0 || std::abs(values.back()) != 0.0) {
    throw PreconditionError("generalized Weyl quotient: section must vanish at both end nodes");
  }
  auto residual = apply_dirac_squared(section, profile);
  for (std::size_t j = 0; j < values.size(); ++j) residual.values[j] -= lambda * values[j];
  return weyl_functional(values, residual.values, log_density_on(section.grid, profile), section.grid.h());
}

double generalized_weyl_quotient(double lambda, const RadialSection& section, const ReducedOperator& op) {
  if (!(section.grid == op.grid)) throw DomainError("generalized Weyl quotient: grid mismatch");
  auto residual = op.apply(section.values);
  for (std::size_t j = 0; j < residual.size(); ++j) residual[j] -= lambda * section.values[j];
  return weyl_functional(section.values, residual, op.log_rho, op.grid.h());
}

WeylDecomposition weyl_decomposition(double lambda, const ChiParameters& chi, const WarpingProfile& profile,
                                     const RadialGrid& grid) {
  const auto eta = build_eta_i(lambda, chi, grid);
  auto laplace = apply_scalar_laplacian(eta, profile);
  for (std::size_t j = 0; j < grid.size(); ++j) laplace.values[j] -= lambda * eta.values[j];
  const auto log_rho = log_density_on(grid, profile);
  WeylDecomposition out;
  for (std::size_t j = 0; j < grid.size(); ++j) {
    if (eta.values[j] != 0.0) out.potential_sup = std::max(out.potential_sup, std::abs(profile.potential(grid.node(j))));
  }
  out.inverse_radius = 1.0 / chi.R;
  out.laplace_ratio = std::exp(log_weighted_norm(laplace.values, log_rho, grid.h(), 1.0) -
                               2.0 * log_weighted_norm(eta.values, log_rho, grid.h(), 2.0));
  out.bound = out.potential_sup + out.inverse_radius + out.laplace_ratio;
  return out;
}

double leibniz_identity_check(std::span<const double> eta, const RadialSection& phi, double lambda,
                              const WarpingProfile& profile) {
  const RadialGrid& grid = phi.grid;
  const std::size_t m = grid.size();
  if (eta.size() != m) throw DomainError("leibniz_identity_check: length mismatch");
  const double h = grid.h();

  RadialSection product(grid);
  RadialSection eta_section(grid);
  for (std::size_t j = 0; j < m; ++j) {
    product.values[j] = eta[j] * phi.values[j];
    eta_section.values[j] = eta[j];
  }
  const auto lhs = apply_dirac_squared(product, profile);
  const auto d2_phi = apply_dirac_squared(phi, profile);
  const auto lap_eta = apply_scalar_laplacian(eta_section, profile);
  const auto d_eta = central_derivative(eta, h);

  double worst = 0.0;
  for (std::size_t j = 1; j + 1 < m; ++j) {
    const Complex d_phi = (phi.values[j + 1] - phi.values[j - 1]) / (2.0 * h);
    const Complex left = lhs.values[j] - lambda * product.values[j];
    const Complex right =
        eta[j] * d2_phi.values[j] - 2.0 * d_eta[j] * d_phi + (lap_eta.values[j] - lambda * eta[j]) * phi.values[j];
    worst = std::max(worst, std::abs(left - right));
  }
  return worst;
}

HarmonicFamily asymptotically_harmonic_family(const WarpingProfile& profile, double R, const RadialGrid& grid) {
  if (!(R >= 0.0) || !(R < grid.t_max())) throw PreconditionError("harmonic family: need 0 <= R < T_max");
  HarmonicFamily out{RadialSection(grid), std::abs(profile.potential(R))};
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double t = grid.node(j);
    if (t >= R) {
      out.section.values[j] = 1.0;
      out.certificate = std::max(out.certificate, std::abs(profile.potential(t)));
    }
  }
  return out;
}

WangResult wang_scaling_check(double lambda, std::span<const double> R_list, const WarpingProfile& profile,
                              const RadialGrid& grid) {
  if (R_list.size() < 2) throw PreconditionError("wang_scaling_check: need at least two radii");
  const auto log_rho = log_density_on(grid, profile);
  const double h = grid.h();
  WangResult out;
  for (double R : R_list) {
    const ChiParameters chi{R, 3.0 * R, 6.0 * R};
    const auto cut = make_chi_cutoff(chi, grid);
    const auto eta = build_eta_i(lambda, chi, grid);
    auto laplace = apply_scalar_laplacian(eta, profile);
    for (std::size_t j = 0; j < grid.size(); ++j) laplace.values[j] -= lambda * eta.values[j];
    std::vector<Complex> amplitude_slope(grid.size()), full_slope(grid.size());
    const double k = std::sqrt(lambda);
    for (std::size_t j = 0; j < grid.size(); ++j) {
      amplitude_slope[j] = cut.d1[j];
      full_slope[j] = (cut.d1[j] + kI * (k * cut.values[j])) * std::exp(kI * (k * grid.node(j)));
    }
    const double log_eta = log_weighted_norm(eta.values, log_rho, h, 1.0);
    out.R.push_back(R);
    out.laplace_ratio.push_back(std::exp(log_weighted_norm(laplace.values, log_rho, h, 1.0) - log_eta));
    out.gradient_ratio.push_back(std::exp(log_weighted_norm(amplitude_slope, log_rho, h, 1.0) - log_eta));
    out.phase_gradient_ratio.push_back(std::exp(log_weighted_norm(full_slope, log_rho, h, 1.0) - log_eta));
  }
  out.laplace_slope = loglog_slope(out.R, out.laplace_ratio);
  out.gradient_slope = loglog_slope(out.R, out.gradient_ratio);
  const auto in_window = [](double s) { return s >= -1.3 && s <= -0.7; };
  out.within_window = in_window(out.laplace_slope) && in_window(out.gradient_slope);
  out.passed = out.laplace_slope <= -0.7 && out.gradient_slope <= -0.7;
  return out;
}

}  // namespace speclab
