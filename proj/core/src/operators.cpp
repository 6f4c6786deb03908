#include "speclab/operators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "speclab/errors.hpp"
#include "speclab/numeric.hpp"
#include "speclab/tridiag.hpp"

namespace speclab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr Complex kI{0.0, 1.0};

void check_sign(int sign) {
  if (sign != 1 && sign != -1) throw DomainError("sector sign must be +1 or -1");
}

std::vector<Complex> first_derivative(std::span<const Complex> u, double h) {
  const std::size_t m = u.size();
  std::vector<Complex> du(m);
  for (std::size_t j = 1; j + 1 < m; ++j) du[j] = (u[j + 1] - u[j - 1]) / (2.0 * h);
  du[0] = (-3.0 * u[0] + 4.0 * u[1] - u[2]) / (2.0 * h);
  du[m - 1] = (3.0 * u[m - 1] - 4.0 * u[m - 2] + u[m - 3]) / (2.0 * h);
  return du;
}

std::vector<Complex> second_derivative(std::span<const Complex> u, double h) {
  const std::size_t m = u.size();
  const double h2 = h * h;
  std::vector<Complex> d2(m);
  for (std::size_t j = 1; j + 1 < m; ++j) d2[j] = (u[j + 1] - 2.0 * u[j] + u[j - 1]) / h2;
  if (m >= 4) {
    d2[0] = (2.0 * u[0] - 5.0 * u[1] + 4.0 * u[2] - u[3]) / h2;
    d2[m - 1] = (2.0 * u[m - 1] - 5.0 * u[m - 2] + 4.0 * u[m - 3] - u[m - 4]) / h2;
  } else {
    d2[0] = d2[1];
    d2[m - 1] = d2[m - 2];
  }
  return d2;
}

}  // namespace

const char* to_string(OperatorKind kind) {
  return kind == OperatorKind::DiracSquared ? "DiracSquared" : "ScalarLaplacian";
}

const char* to_string(BoundaryCondition bc) { return bc == BoundaryCondition::Dirichlet ? "Dirichlet" : "Neumann"; }

double connection_coefficient(const WarpingProfile& profile, double t) {
  if (!(t >= 0.0)) throw DomainError("connection_coefficient: t must be >= 0");
  return profile.connection(t);
}

void check_resolution(const WarpingProfile& profile, const RadialGrid& grid) {
  const double h = grid.h();
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double t = grid.node(j);
    const double a = profile.connection(t);
    if (std::abs(a) * h > 0.5) {
      std::ostringstream msg;
      msg << "grid too coarse: |a(t)| h = " << std::abs(a) * h << " > 0.5 at t = " << t;
      throw AccuracyError(msg.str());
    }
  }
}

RadialSection apply_dirac(const RadialSection& section, const WarpingProfile& profile, int sign) {
  check_sign(sign);
  const RadialGrid& grid = section.grid;
  check_resolution(profile, grid);
  const auto du = first_derivative(section.values, grid.h());
  RadialSection out(grid);
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double a = profile.connection(grid.node(j));
    out.values[j] = static_cast<double>(sign) * kI * (du[j] + a * section.values[j]);
  }
  return out;
}

namespace {

RadialSection apply_second_order(const RadialSection& section, const WarpingProfile& profile, bool with_potential) {
  const RadialGrid& grid = section.grid;
  check_resolution(profile, grid);
  const auto du = first_derivative(section.values, grid.h());
  const auto d2u = second_derivative(section.values, grid.h());
  RadialSection out(grid);
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double t = grid.node(j);
    const double a = profile.connection(t);
    const double q = with_potential ? profile.potential(t) : 0.0;
    out.values[j] = -d2u[j] - 2.0 * a * du[j] + q * section.values[j];
  }
  return out;
}

}  // namespace

RadialSection apply_dirac_squared(const RadialSection& section, const WarpingProfile& profile) {
  return apply_second_order(section, profile, true);
}

RadialSection apply_scalar_laplacian(const RadialSection& section, const WarpingProfile& profile) {
  return apply_second_order(section, profile, false);
}

std::vector<Complex> ReducedOperator::apply(std::span<const Complex> u) const {
  const std::size_t m = size();
  if (u.size() != m) throw DomainError("ReducedOperator::apply: length mismatch");
  std::vector<Complex> out(m);
  for (std::size_t j = 0; j < m; ++j) {
    Complex acc = diag[j] * u[j];
    // Weighted coefficients T_{j,k} sqrt(rho_k / rho_j).
    if (j > 0) acc += offdiag[j - 1] * std::exp(0.5 * (log_rho[j - 1] - log_rho[j])) * u[j - 1];
    if (j + 1 < m) acc += offdiag[j] * std::exp(0.5 * (log_rho[j + 1] - log_rho[j])) * u[j + 1];
    out[j] = acc;
  }
  return out;
}

std::vector<double> ReducedOperator::apply_flat(std::span<const double> w) const {
  const std::size_t m = size();
  if (w.size() != m) throw DomainError("ReducedOperator::apply_flat: length mismatch");
  std::vector<double> out(m);
  for (std::size_t j = 0; j < m; ++j) {
    double acc = diag[j] * w[j];
    if (j > 0) acc += offdiag[j - 1] * w[j - 1];
    if (j + 1 < m) acc += offdiag[j] * w[j + 1];
    out[j] = acc;
  }
  return out;
}

double ReducedOperator::log_flat_scale(std::size_t j) const {
  return 0.5 * (log_rho.at(j) + std::log(grid.h()));
}

ReducedOperator assemble_operator(const WarpingProfile& profile, const RadialGrid& grid, OperatorKind kind,
                                  BoundaryCondition bc) {
  check_resolution(profile, grid);
  const std::size_t m = grid.size();
  const double h = grid.h();
  const double h2 = h * h;
  ReducedOperator op;
  op.kind = kind;
  op.bc = bc;
  op.grid = grid;
  op.diag.resize(m);
  op.offdiag.resize(m - 1);
  op.connection.resize(m);
  op.potential.assign(m, 0.0);
  op.log_rho.resize(m);

  std::vector<double> log_face(m + 1);  // log rho at t = (j + 1/2) h, j = 0..m
  for (std::size_t j = 0; j <= m; ++j) log_face[j] = profile.log_density((static_cast<double>(j) + 0.5) * h);
  for (std::size_t j = 0; j < m; ++j) {
    const double t = grid.node(j);
    op.log_rho[j] = profile.log_density(t);
    op.connection[j] = profile.connection(t);
    if (kind == OperatorKind::DiracSquared) op.potential[j] = profile.potential(t);
  }
  const auto check_finite = [](double v, double t) {
    if (!std::isfinite(v)) {
      std::ostringstream msg;
      msg << "assembly error: density is not positive and finite at t = " << t;
      throw NumericError(msg.str());
    }
  };
  for (std::size_t j = 0; j <= m; ++j) check_finite(log_face[j], (static_cast<double>(j) + 0.5) * h);
  for (std::size_t j = 0; j < m; ++j) check_finite(op.log_rho[j], grid.node(j));

  for (std::size_t j = 0; j < m; ++j) {
    double lower = std::exp(log_face[j] - op.log_rho[j]);
    double upper = std::exp(log_face[j + 1] - op.log_rho[j]);
    if (bc == BoundaryCondition::Neumann) {
      if (j == 0) lower = 0.0;
      if (j + 1 == m) upper = 0.0;
    }
    op.diag[j] = (lower + upper) / h2 + op.potential[j];
    if (j + 1 < m) {
      op.offdiag[j] = -std::exp(log_face[j + 1] - 0.5 * (op.log_rho[j] + op.log_rho[j + 1])) / h2;
    }
  }
  double min_q = kInf;
  for (double q : op.potential) min_q = std::min(min_q, q);
  op.K1 = std::max(0.0, -min_q);
  return op;
}

double log_weighted_norm(std::span<const Complex> values, std::span<const double> log_rho, double h, double p) {
  if (!(p >= 1.0)) throw DomainError("weighted_norm: p must be >= 1");
  if (values.size() != log_rho.size()) throw DomainError("weighted_norm: length mismatch");
  if (std::isinf(p)) {
    double peak = 0.0;
    for (const Complex& v : values) peak = std::max(peak, std::abs(v));
    return std::log(peak);
  }
  std::vector<double> terms;
  terms.reserve(values.size());
  for (std::size_t j = 0; j < values.size(); ++j) {
    const double mag = std::abs(values[j]);
    if (mag > 0.0) terms.push_back(p * std::log(mag) + log_rho[j]);
  }
  if (terms.empty()) return -kInf;
  return (log_sum_exp(terms) + std::log(h)) / p;
}

double weighted_norm(std::span<const Complex> values, std::span<const double> log_rho, double h, double p) {
  return std::exp(log_weighted_norm(values, log_rho, h, p));
}

double weighted_norm(const RadialSection& section, const WarpingProfile& profile, double p) {
  const RadialGrid& grid = section.grid;
  std::vector<double> log_rho(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) log_rho[j] = profile.log_density(grid.node(j));
  return weighted_norm(section.values, log_rho, grid.h(), p);
}

KatoResult kato_pointwise_check(const RadialSection& section, const WarpingProfile& profile) {
  const RadialGrid& grid = section.grid;
  const auto dirac = assemble_operator(profile, grid, OperatorKind::DiracSquared);
  const auto laplacian = assemble_operator(profile, grid, OperatorKind::ScalarLaplacian);
  const std::size_t m = grid.size();
  std::vector<Complex> modulus(m);
  double peak = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    modulus[j] = std::abs(section.values[j]);
    peak = std::max(peak, std::abs(section.values[j]));
  }
  const auto lu = dirac.apply(section.values);
  const auto lap_mod = laplacian.apply(modulus);

  KatoResult result;
  result.max_violation = -kInf;
  double term_scale = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    const double mod = modulus[j].real();
    if (mod < 1e-12) {
      ++result.skipped;
      continue;
    }
    ++result.tested;
    const double lhs = mod * (lap_mod[j].real() - dirac.K1 * mod);
    const double rhs = (lu[j] * std::conj(section.values[j])).real();
    term_scale = std::max(term_scale, mod * (std::abs(dirac.diag[j]) + std::abs(dirac.K1)) * peak);
    result.max_violation = std::max(result.max_violation, lhs - rhs);
  }
  const double h = grid.h();
  result.slack = h * h * peak * peak + 1e-12 * term_scale;
  result.passed = result.tested > 0 && result.max_violation <= result.slack;
  return result;
}

double max_gap_statistic(std::span<const double> eigenvalues, double upper) {
  double previous = 0.0;
  double gap = 0.0;
  for (double v : eigenvalues) {
    if (v < 0.0 || v > upper) continue;
    gap = std::max(gap, v - previous);
    previous = v;
  }
  return std::max(gap, upper - previous);
}

SpectrumWindow spectrum_window(const WarpingProfile& profile, double T_max, double lambda_max, double h) {
  if (!(lambda_max > 0.0)) throw DomainError("spectrum_window: lambda_max must be positive");
  if (h * std::sqrt(lambda_max) > 0.05 * (1.0 + 1e-12)) {
    std::ostringstream msg;
    msg << "spectrum_window: h sqrt(lambda_max) = " << h * std::sqrt(lambda_max) << " exceeds 0.05";
    throw PreconditionError(msg.str());
  }
  const RadialGrid grid = RadialGrid::covering(T_max, h);
  const auto op = assemble_operator(profile, grid, OperatorKind::DiracSquared);
  const auto [lo, hi] = gershgorin_interval(op.diag, op.offdiag);
  // Small eigenvalues sit far below ||T||, so bisect to full precision rather than a norm-relative width.
  const auto eig = eig_sym_tridiag(op.diag, op.offdiag, lo, std::min(lambda_max, hi), 0.0);
  SpectrumWindow window;
  window.lambda_max = lambda_max;
  window.eigenvalues = eig.values;
  window.max_gap = max_gap_statistic(window.eigenvalues, lambda_max);
  window.T_max = grid.t_max();
  window.h = grid.h();
  return window;
}

}  // namespace speclab
