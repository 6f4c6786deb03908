#include "speclab/heat.hpp"

#include <algorithm>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <limits>
#include <sstream>

#include "speclab/errors.hpp"
#include "speclab/numeric.hpp"
#include "speclab/tridiag.hpp"

namespace speclab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void check_tau(double tau) {
  if (!(tau > 0.0) || !std::isfinite(tau)) throw DomainError("tau must be positive and finite");
}

// e^{-0 L} = I is allowed wherever the semigroup itself is evaluated.
void check_time(double tau) {
  if (!(tau >= 0.0) || !std::isfinite(tau)) throw DomainError("tau must be nonnegative and finite");
}

Eigen::Index idx(std::size_t j) { return static_cast<Eigen::Index>(j); }

/// Node indices of the sampled source rows and target columns.
struct SamplePlan {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> columns;
  double max_distance = 0.0;
};

std::size_t nearest_node(const RadialGrid& grid, double t) {
  const double raw = std::round(t / grid.h()) - 1.0;
  return static_cast<std::size_t>(std::clamp(raw, 0.0, static_cast<double>(grid.size() - 1)));
}

SamplePlan plan_samples(const RadialGrid& grid, const KernelSampleOptions& options) {
  if (options.rows == 0 || !(options.column_step > 0.0)) throw DomainError("kernel sampling: empty sample plan");
  SamplePlan plan;
  const double T = grid.t_max();
  for (std::size_t i = 0; i < options.rows; ++i) {
    plan.rows.push_back(nearest_node(grid, T * static_cast<double>(i + 1) / static_cast<double>(options.rows + 1)));
  }
  for (double t = options.column_step; t < T - 0.5 * grid.h(); t += options.column_step) {
    plan.columns.push_back(nearest_node(grid, t));
  }
  plan.rows.erase(std::unique(plan.rows.begin(), plan.rows.end()), plan.rows.end());
  plan.columns.erase(std::unique(plan.columns.begin(), plan.columns.end()), plan.columns.end());
  plan.max_distance = options.max_distance_fraction * T;
  return plan;
}

std::string describe_plan(const RadialGrid& grid, const KernelSampleOptions& options, std::size_t kept,
                          std::size_t total) {
  std::ostringstream out;
  out << options.rows << " source rows evenly spaced in (0, " << grid.t_max() << "), targets every "
      << options.column_step << ", pairs with d <= " << options.max_distance_fraction << " T_max and |kernel| >= "
      << options.noise_floor << " max; kept " << kept << " of " << total;
  return out.str();
}

struct RawSample {
  KernelSample sample;
  double flat_abs = 0.0;
};

/// Sampled heat-kernel values for one tau with the flat-coordinate noise floor applied.
std::vector<KernelSample> sample_heat_kernel(const ReducedOperator& op, const SpectralCalculus& calculus,
                                             double tau, const SamplePlan& plan,
                                             const KernelSampleOptions& options, std::size_t& total) {
  const double log_h = std::log(op.grid.h());
  std::vector<RawSample> raw;
  double peak = 0.0;
  for (std::size_t j : plan.rows) {
    const Eigen::VectorXd row = calculus.heat_row(tau, j);
    for (std::size_t k : plan.columns) {
      const double x = op.grid.node(j);
      const double y = op.grid.node(k);
      const double d = std::abs(x - y);
      if (d > plan.max_distance) continue;
      ++total;
      const double e = row[idx(k)];
      peak = std::max(peak, std::abs(e));
      RawSample r;
      r.flat_abs = std::abs(e);
      r.sample = {tau, x, y, d,
                  std::log(std::abs(e)) - 0.5 * (op.log_rho[j] + op.log_rho[k]) - log_h};
      raw.push_back(r);
    }
  }
  std::vector<KernelSample> kept;
  for (const auto& r : raw) {
    if (r.flat_abs >= options.noise_floor * peak && r.flat_abs > 0.0) kept.push_back(r.sample);
  }
  return kept;
}

double table_extent(const RadialGrid& grid, double radius) { return grid.t_max() + radius + 1.0; }

}  // namespace

SpectralCalculus::SpectralCalculus(std::span<const double> diag, std::span<const double> offdiag)
    : diag_(diag.begin(), diag.end()), offdiag_(offdiag.begin(), offdiag.end()) {
  auto eig = eig_sym_tridiag_all(diag_, offdiag_, 0.0, true);
  values_ = std::move(eig.values);
  vectors_ = std::move(eig.vectors);
  warnings_ = std::move(eig.warnings);
  max_residual_ = eig.max_residual;
  norm_ = tridiag_norm_inf(diag_, offdiag_);
  tolerance_ = default_eig_tolerance(diag_, offdiag_);
}

SpectralCalculus::SpectralCalculus(const ReducedOperator& op) : SpectralCalculus(op.diag, op.offdiag) {}

Eigen::MatrixXd SpectralCalculus::heat(double tau) const {
  check_time(tau);
  // E = W W^T with W = V e^{-tau Lambda / 2}; only the lower triangle is formed.
  Eigen::VectorXd weights(idx(size()));
  for (std::size_t i = 0; i < size(); ++i) weights[idx(i)] = std::exp(-0.5 * tau * values_[i]);
  const Eigen::MatrixXd W = vectors_ * weights.asDiagonal();
  Eigen::MatrixXd E = Eigen::MatrixXd::Zero(W.rows(), W.rows());
  E.selfadjointView<Eigen::Lower>().rankUpdate(W);
  E.triangularView<Eigen::StrictlyUpper>() = E.transpose();
  return E;
}

Eigen::VectorXd SpectralCalculus::heat_row(double tau, std::size_t j) const {
  check_time(tau);
  if (j >= size()) throw DomainError("heat_row: index out of range");
  Eigen::VectorXd coeff(idx(size()));
  for (std::size_t i = 0; i < size(); ++i) coeff[idx(i)] = std::exp(-tau * values_[i]) * vectors_(idx(j), idx(i));
  return vectors_ * coeff;
}

double SpectralCalculus::heat_entry(double tau, std::size_t j, std::size_t k) const {
  check_time(tau);
  if (j >= size() || k >= size()) throw DomainError("heat_entry: index out of range");
  double acc = 0.0;
  for (std::size_t i = 0; i < size(); ++i) {
    acc += vectors_(idx(j), idx(i)) * std::exp(-tau * values_[i]) * vectors_(idx(k), idx(i));
  }
  return acc;
}

Eigen::VectorXcd SpectralCalculus::resolvent_weights(Complex xi, int m) const {
  if (m < 1) throw DomainError("resolvent power must be >= 1");
  Eigen::VectorXcd weights(idx(size()));
  for (std::size_t i = 0; i < size(); ++i) {
    const Complex gap = values_[i] - xi;
    if (std::abs(gap) <= tolerance_) {
      std::ostringstream msg;
      msg << "resolvent parameter " << xi << " lies within " << tolerance_ << " of eigenvalue " << values_[i];
      throw NumericError(msg.str());
    }
    weights[idx(i)] = std::pow(gap, -m);
  }
  return weights;
}

Eigen::MatrixXcd SpectralCalculus::resolvent_power(Complex xi, int m) const {
  const Eigen::VectorXcd weights = resolvent_weights(xi, m);
  const Eigen::MatrixXcd V = vectors_.cast<Complex>();
  return V * weights.asDiagonal() * V.transpose();
}

Eigen::VectorXcd SpectralCalculus::resolvent_power_row(Complex xi, int m, std::size_t j) const {
  if (j >= size()) throw DomainError("resolvent_power_row: index out of range");
  const Eigen::VectorXcd weights = resolvent_weights(xi, m);
  Eigen::VectorXcd coeff(idx(size()));
  for (std::size_t i = 0; i < size(); ++i) coeff[idx(i)] = weights[idx(i)] * vectors_(idx(j), idx(i));
  return vectors_.cast<Complex>() * coeff;
}

Eigen::VectorXd SpectralCalculus::apply(const Eigen::VectorXd& x) const {
  const std::size_t n = size();
  Eigen::VectorXd out(idx(n));
  for (std::size_t i = 0; i < n; ++i) {
    double acc = diag_[i] * x[idx(i)];
    if (i > 0) acc += offdiag_[i - 1] * x[idx(i - 1)];
    if (i + 1 < n) acc += offdiag_[i] * x[idx(i + 1)];
    out[idx(i)] = acc;
  }
  return out;
}

Eigen::MatrixXd SpectralCalculus::apply(const Eigen::MatrixXd& x) const {
  Eigen::MatrixXd out(x.rows(), x.cols());
  for (Eigen::Index c = 0; c < x.cols(); ++c) out.col(c) = apply(Eigen::VectorXd(x.col(c)));
  return out;
}

SemigroupMatrix heat_matrix(const SpectralCalculus& calculus, double tau) {
  check_time(tau);
  if (calculus.max_residual() > 1e-6 * std::max(1.0, calculus.matrix_norm())) {
    std::ostringstream msg;
    msg << "eigendecomposition failed: eigenvector residual " << calculus.max_residual();
    throw NumericError(msg.str());
  }
  SemigroupMatrix out;
  out.tau = tau;
  out.E = calculus.heat(tau);
  const Eigen::MatrixXd TE = calculus.apply(out.E);
  out.commutator_residual = (TE - TE.transpose()).cwiseAbs().rowwise().sum().maxCoeff();
  return out;
}

SemigroupMatrix heat_matrix(const ReducedOperator& op, double tau) { return heat_matrix(SpectralCalculus(op), tau); }

SemigroupMatrix heat_matrix(std::span<const double> diag, std::span<const double> offdiag, double tau) {
  return heat_matrix(SpectralCalculus(diag, offdiag), tau);
}

double heat_kernel_value(const ReducedOperator& op, const SpectralCalculus& calculus, double tau, std::size_t j,
                         std::size_t k) {
  const double e = calculus.heat_entry(tau, j, k);
  return e * std::exp(-0.5 * (op.log_rho.at(j) + op.log_rho.at(k))) / op.grid.h();
}

double heat_kernel_value(const ReducedOperator& op, double tau, std::size_t j, std::size_t k) {
  return heat_kernel_value(op, SpectralCalculus(op), tau, j, k);
}

DominationResult domination_check(const WarpingProfile& profile, const RadialGrid& grid,
                                  std::span<const double> tau_list) {
  const auto dirac = assemble_operator(profile, grid, OperatorKind::DiracSquared);
  const auto laplacian = assemble_operator(profile, grid, OperatorKind::ScalarLaplacian);
  const SpectralCalculus dirac_eig(dirac);
  const SpectralCalculus laplacian_eig(laplacian);
  DominationResult result;
  result.K1 = dirac.K1;
  for (double tau : tau_list) {
    const Eigen::MatrixXd ED = heat_matrix(dirac_eig, tau).E;
    const Eigen::MatrixXd bound = std::exp(result.K1 * tau) * heat_matrix(laplacian_eig, tau).E;
    DominationEntry entry;
    entry.tau = tau;
    entry.scale = bound.maxCoeff();
    entry.max_violation = (ED.cwiseAbs() - bound).maxCoeff();
    result.max_relative_violation = std::max(result.max_relative_violation, entry.max_violation / entry.scale);
    result.entries.push_back(entry);
  }
  result.passed = true;
  for (const auto& e : result.entries) {
    if (!(e.max_violation <= 1e-8 * e.scale)) result.passed = false;
  }
  return result;
}

double weighted_operator_norm(const Eigen::MatrixXd& E, std::span<const double> log_rho, double p) {
  const auto m = E.rows();
  if (E.cols() != m || static_cast<std::size_t>(m) != log_rho.size()) throw DomainError("weighted norm: shape");
  const bool one = p == 1.0;
  if (!one && !std::isinf(p)) throw DomainError("weighted operator norm: p must be 1 or inf");
  // Weighted-coordinate matrix A_jk = E_jk sqrt(rho_k / rho_j).
  // p = 1: max_k sum_j |A_jk| rho_j / rho_k = max_k sum_j |E_jk| sqrt(rho_j / rho_k).
  // p = inf: max_j sum_k |A_jk| = max_j sum_k |E_jk| sqrt(rho_k / rho_j).
  double best = 0.0;
  for (Eigen::Index outer = 0; outer < m; ++outer) {
    double acc = 0.0;
    for (Eigen::Index inner = 0; inner < m; ++inner) {
      const double e = one ? E(inner, outer) : E(outer, inner);
      if (e == 0.0) continue;
      acc += std::abs(e) * std::exp(0.5 * (log_rho[static_cast<std::size_t>(inner)] -
                                           log_rho[static_cast<std::size_t>(outer)]));
    }
    best = std::max(best, acc);
  }
  return best;
}

PNormResult pnorm_growth_check(const ReducedOperator& op, const SpectralCalculus& calculus,
                               std::span<const double> tau_list, double p) {
  if (p != 1.0 && !std::isinf(p)) throw DomainError("pnorm_growth_check: p must be 1 or inf");
  PNormResult result;
  result.p = p;
  result.K1 = op.K1;
  for (double tau : tau_list) {
    PNormEntry entry;
    entry.tau = tau;
    if (tau == 0.0) {
      entry.norm = 1.0;
    } else {
      entry.norm = weighted_operator_norm(heat_matrix(calculus, tau).E, op.log_rho, p);
    }
    entry.scaled = entry.norm * std::exp(-op.K1 * tau);
    result.max_scaled = std::max(result.max_scaled, entry.scaled);
    result.entries.push_back(entry);
  }
  result.passed = result.max_scaled <= 1.0 + 1e-8;
  return result;
}

PNormResult pnorm_growth_check(const ReducedOperator& op, std::span<const double> tau_list, double p) {
  return pnorm_growth_check(op, SpectralCalculus(op), tau_list, p);
}

double KernelBoundFit::constant(std::string_view name) const {
  for (const auto& [key, value] : constants) {
    if (key == name) return value;
  }
  throw DomainError("KernelBoundFit: no constant named " + std::string(name));
}

double ricci_lower_bound(const WarpingProfile& profile, const RadialGrid& grid) {
  double K0 = 0.0;
  const double n1 = static_cast<double>(profile.dimension() - 1);
  for (std::size_t j = 0; j < grid.size(); ++j) {
    K0 = std::max(K0, n1 * profile.eval_log(grid.node(j)).f2_over_f);
  }
  return K0;
}

KernelBoundFit gaussian_bound_fit(const WarpingProfile& profile, const RadialGrid& grid,
                                  std::span<const double> tau_list, double delta,
                                  const GaussianFitOptions& options) {
  const auto op = assemble_operator(profile, grid, OperatorKind::DiracSquared);
  return gaussian_bound_fit(profile, op, SpectralCalculus(op), tau_list, delta, options);
}

KernelBoundFit gaussian_bound_fit(const WarpingProfile& profile, const ReducedOperator& op,
                                  const SpectralCalculus& calculus, std::span<const double> tau_list, double delta,
                                  const GaussianFitOptions& options) {
  if (!(delta > 0.0 && delta < 1.0)) throw DomainError("gaussian_bound_fit: delta must lie in (0, 1)");
  if (tau_list.empty()) throw DomainError("gaussian_bound_fit: empty tau list");
  const RadialGrid& grid = op.grid;
  const double K0 = ricci_lower_bound(profile, grid);
  const double K1 = op.K1;
  const SamplePlan plan = plan_samples(grid, options.sampling);
  double max_tau = 0.0;
  for (double tau : tau_list) max_tau = std::max(max_tau, tau);
  const VolumeTable table(profile, table_extent(grid, std::sqrt(max_tau)), options.volume_step);

  KernelBoundFit fit;
  fit.form = "heatg";
  std::size_t total = 0;
  // Per sample: need log C3 >= a + b / C4 - C5 c.
  std::vector<double> a, b, c;
  for (double tau : tau_list) {
    check_tau(tau);
    auto samples = sample_heat_kernel(op, calculus, tau, plan, options.sampling, total);
    const double r = std::sqrt(tau);
    for (const auto& s : samples) {
      a.push_back(s.log_abs + 0.5 * (table.log_ball(s.x, r) + table.log_ball(s.y, r)) - K1 * tau);
      b.push_back(s.distance * s.distance / tau);
      c.push_back(std::sqrt(K0 * tau));
      fit.samples.push_back(s);
    }
  }
  fit.sample_description = describe_plan(grid, options.sampling, fit.samples.size(), total);
  if (fit.samples.empty()) throw NumericError("gaussian_bound_fit: no samples above the noise floor");

  // Near and far are measured by the Gaussian variable d^2 / tau.
  double b_max = 0.0;
  for (double v : b) b_max = std::max(b_max, v);
  const double b_split = 0.5 * b_max;
  const auto required = [&](double C4, double C5, bool near_only) {
    double best = -kInf;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (near_only && b[i] > b_split) continue;
      best = std::max(best, a[i] + b[i] / C4 - C5 * c[i]);
    }
    return best;
  };
  constexpr double kSlack = 1e-9;

  std::vector<double> c4_candidates;
  if (options.forced_C4) {
    c4_candidates.push_back(*options.forced_C4);
  } else {
    const auto steps = static_cast<int>(std::floor((options.C4_max - options.C4_min) / options.C4_step + 1e-9));
    for (int i = 0; i <= steps; ++i) c4_candidates.push_back(options.C4_min + options.C4_step * i);
  }
  const auto c5_steps = static_cast<int>(std::floor(options.C5_max / options.C5_step + 1e-9));

  bool found = false;
  double C4 = c4_candidates.back();
  double C5 = options.C5_max;
  for (double c4 : c4_candidates) {
    for (int i = 0; i <= c5_steps && !found; ++i) {
      const double c5 = options.C5_step * i;
      if (required(c4, c5, false) - required(c4, c5, true) <= kSlack) {
        found = true;
        C4 = c4;
        C5 = c5;
      }
      if (K0 == 0.0) break;  // C5 has no effect
    }
    if (found) break;
  }
  if (!found && options.forced_C4) C5 = 0.0;
  const double log_c3_near = required(C4, C5, true);
  const double log_c3 = required(C4, C5, false);
  fit.max_log_violation = log_c3 - log_c3_near;
  fit.max_relative_violation = std::expm1(fit.max_log_violation);
  fit.constants = {{"C3", std::exp(log_c3)},
                   {"C3_near", std::exp(log_c3_near)},
                   {"C4", C4},
                   {"C5", C5},
                   {"K0", K0},
                   {"K1", K1},
                   {"delta", delta},
                   {"C4_reference", 4.0 * (1.0 + delta)}};
  fit.passed = found && std::isfinite(log_c3);
  return fit;
}

KernelBoundFit mu_form_bound_fit(const WarpingProfile& profile, const RadialGrid& grid, double beta,
                                 std::span<const double> tau_list, const MuFormOptions& options) {
  const auto op = assemble_operator(profile, grid, OperatorKind::DiracSquared);
  return mu_form_bound_fit(profile, op, SpectralCalculus(op), beta, tau_list, options);
}

KernelBoundFit mu_form_bound_fit(const WarpingProfile& profile, const ReducedOperator& op,
                                 const SpectralCalculus& calculus, double beta, std::span<const double> tau_list,
                                 const MuFormOptions& options) {
  if (!(beta > 0.0)) throw DomainError("mu_form_bound_fit: beta must be positive");
  if (tau_list.empty()) throw DomainError("mu_form_bound_fit: empty tau list");
  const RadialGrid& grid = op.grid;
  const SamplePlan plan = plan_samples(grid, options.sampling);
  const VolumeTable table(profile, table_extent(grid, 1.0), options.volume_step);
  const double half_n = 0.5 * static_cast<double>(profile.dimension());

  KernelBoundFit fit;
  fit.form = "heat42";
  std::size_t total = 0;
  std::vector<double> taus, peaks, residual;
  for (double tau : tau_list) {
    check_tau(tau);
    auto samples = sample_heat_kernel(op, calculus, tau, plan, options.sampling, total);
    double peak = -kInf;
    for (const auto& s : samples) {
      // log|H| - log mu(x)^2 - log max(tau^{-n/2}, 1) + beta d
      const double r = s.log_abs - table.log_mu_squared(s.x) - std::max(-half_n * std::log(tau), 0.0) +
                       beta * s.distance;
      residual.push_back(r);
      peak = std::max(peak, r);
      fit.samples.push_back(s);
    }
    if (peak > -kInf) {
      taus.push_back(tau);
      peaks.push_back(peak);
    }
  }
  fit.sample_description = describe_plan(grid, options.sampling, fit.samples.size(), total);
  if (taus.empty()) throw NumericError("mu_form_bound_fit: no samples above the noise floor");
  // log C - (alpha + 1) tau is an upper line in tau with slope s = -(alpha + 1) > -1.
  constexpr double kSlopeFloor = -1.0 + 1e-9;
  const LineFit line = taus.size() >= 2 ? fit_upper_line(taus, peaks, kSlopeFloor, 1e3)
                                        : LineFit{0.0, peaks.front()};
  const double alpha = -1.0 - line.slope;
  double worst = -kInf;
  for (std::size_t i = 0; i < residual.size(); ++i) {
    worst = std::max(worst, residual[i] - (line.intercept + line.slope * fit.samples[i].tau));
  }
  fit.max_log_violation = worst;
  fit.max_relative_violation = std::expm1(worst);
  fit.constants = {{"C", std::exp(line.intercept)}, {"alpha", alpha}, {"beta", beta}};
  fit.passed = std::isfinite(line.intercept) && alpha < 0.0 && worst <= 1e-9;
  return fit;
}

Eigen::MatrixXcd resolvent_power_matrix(std::span<const double> diag, std::span<const double> offdiag, Complex xi,
                                        int m) {
  return SpectralCalculus(diag, offdiag).resolvent_power(xi, m);
}

ResolventKernel resolvent_power_kernel(const ReducedOperator& op, const WarpingProfile& profile, Complex xi, int m,
                                       const ResolventOptions& options) {
  return resolvent_power_kernel(op, SpectralCalculus(op), profile, xi, m, options);
}

ResolventKernel resolvent_power_kernel(const ReducedOperator& op, const SpectralCalculus& calculus,
                                       const WarpingProfile& profile, Complex xi, int m,
                                       const ResolventOptions& options) {
  const SamplePlan plan = plan_samples(op.grid, options.sampling);
  const VolumeTable table(profile, table_extent(op.grid, 1.0), options.volume_step);
  const double log_h = std::log(op.grid.h());

  ResolventKernel out;
  out.fit.form = "res1";
  if (options.keep_matrix) {
    out.G = calculus.resolvent_power(xi, m);
    for (Eigen::Index j = 0; j < out.G.rows(); ++j) {
      for (Eigen::Index k = 0; k < out.G.cols(); ++k) {
        out.G(j, k) *= std::exp(-0.5 * (op.log_rho[static_cast<std::size_t>(j)] +
                                         op.log_rho[static_cast<std::size_t>(k)]) - log_h);
      }
    }
  }
  struct Raw {
    KernelSample sample;
    double flat_abs;
  };
  std::vector<Raw> raw;
  double peak = 0.0;
  std::size_t total = 0;
  for (std::size_t j : plan.rows) {
    const Eigen::VectorXcd row = calculus.resolvent_power_row(xi, m, j);
    for (std::size_t k : plan.columns) {
      const double x = op.grid.node(j);
      const double y = op.grid.node(k);
      const double d = std::abs(x - y);
      if (d > plan.max_distance) continue;
      ++total;
      const double mag = std::abs(row[idx(k)]);
      peak = std::max(peak, mag);
      raw.push_back({{kNaN, x, y, d, std::log(mag) - 0.5 * (op.log_rho[j] + op.log_rho[k]) - log_h}, mag});
    }
  }
  std::vector<double> ds, ys;
  for (const auto& r : raw) {
    if (!(r.flat_abs > 0.0) || r.flat_abs < options.sampling.noise_floor * peak) continue;
    out.fit.samples.push_back(r.sample);
    ds.push_back(r.sample.distance);
    // log|G| - log mu(x) - log mu(y)
    ys.push_back(r.sample.log_abs - 0.5 * (table.log_mu_squared(r.sample.x) + table.log_mu_squared(r.sample.y)));
  }
  out.fit.sample_description = describe_plan(op.grid, options.sampling, out.fit.samples.size(), total);
  if (ds.empty()) throw NumericError("resolvent_power_kernel: no samples above the noise floor");
  const LineFit line = fit_upper_line(ds, ys, -options.max_rate, options.max_rate);
  double worst = -kInf;
  for (std::size_t i = 0; i < ds.size(); ++i) worst = std::max(worst, ys[i] - (line.intercept + line.slope * ds[i]));
  out.fit.max_log_violation = worst;
  out.fit.max_relative_violation = std::expm1(worst);
  const double eps = -line.slope;
  out.fit.constants = {{"C", std::exp(line.intercept)}, {"epsilon", eps}, {"xi_re", xi.real()},
                       {"xi_im", xi.imag()}, {"m", static_cast<double>(m)}};
  out.fit.passed = std::isfinite(line.intercept) && eps > 0.0 && worst <= 1e-9;
  return out;
}

LaplaceCheck resolvent_laplace_check(std::span<const double> diag, std::span<const double> offdiag, double alpha,
                                     int m, double tau_max, std::size_t steps) {
  if (m < 2 || m % 2 != 0) throw DomainError("resolvent_laplace_check: m must be even and >= 2");
  if (steps < 16) throw DomainError("resolvent_laplace_check: too few quadrature steps");
  const SpectralCalculus calculus(diag, offdiag);
  const auto& lambda = calculus.eigenvalues();
  const double lambda_min = lambda.front();
  const double lambda_max = lambda.back();
  if (!(alpha < lambda_min)) throw DomainError("resolvent_laplace_check: alpha must lie below the spectrum");
  const double k = 0.5 * m;
  const double gap_min = lambda_min - alpha;
  const double gap_max = lambda_max - alpha;

  LaplaceCheck out;
  out.steps = steps;
  out.tau_max_used = tau_max;
  out.tau_max_required = boost::math::gamma_q_inv(k, 1e-10) / gap_min;
  if (out.tau_max_required > tau_max) {
    std::ostringstream msg;
    msg << "semigroup integral converges too slowly: alpha = " << alpha << " is " << gap_min
        << " below the spectrum, requires tau_max >= " << out.tau_max_required << " (given " << tau_max << ")";
    throw NumericError(msg.str());
  }
  const double t_min = boost::math::gamma_p_inv(k, 1e-14) / gap_max;
  const double s_min = std::log(t_min);
  const double s_max = std::log(tau_max);
  const double ds = (s_max - s_min) / static_cast<double>(steps - 1);
  const double log_gamma = std::lgamma(k);

  const std::size_t n = lambda.size();
  Eigen::VectorXd probe(idx(n));
  for (std::size_t i = 0; i < n; ++i) probe[idx(i)] = 1.0 + 0.5 * std::sin(0.37 * static_cast<double>(i + 1));
  const Eigen::VectorXd coeff = calculus.eigenvectors().transpose() * probe;

  double err2 = 0.0;
  double ref2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double mu = lambda[i] - alpha;
    const double exact = std::pow(mu, -k);
    double quad = 0.0;
    for (std::size_t q = 0; q < steps; ++q) {
      const double s = s_min + ds * static_cast<double>(q);
      const double w = (q == 0 || q + 1 == steps) ? 0.5 : 1.0;
      quad += w * std::exp(k * s - mu * std::exp(s) - log_gamma);
    }
    quad *= ds;
    const double c = coeff[idx(i)];
    err2 += c * c * (quad - exact) * (quad - exact);
    ref2 += c * c * exact * exact;
  }
  out.relative_error = std::sqrt(err2 / ref2);
  return out;
}

LaplaceCheck resolvent_laplace_check(const ReducedOperator& op, double alpha, int m, double tau_max,
                                     std::size_t steps) {
  return resolvent_laplace_check(op.diag, op.offdiag, alpha, m, tau_max, steps);
}

double gaussian_completion_gap(double d, double c, double tau, double gamma) {
  if (!(c > 0.0) || !(tau > 0.0)) throw DomainError("gaussian_completion_gap: c and tau must be positive");
  const double lhs = -d * d / (4.0 * c * tau);
  const double rhs = -gamma * d + c * gamma * gamma * tau;
  return rhs - lhs;
}

}  // namespace speclab
