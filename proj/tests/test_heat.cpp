#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <gtest/gtest.h>

#include "speclab/errors.hpp"
#include "speclab/heat.hpp"
#include "speclab/tridiag.hpp"

using namespace speclab;
using std::numbers::pi;

namespace {

const auto kPoly2 = WarpingProfile::polynomial(2.0, 4);
const auto kExp1 = WarpingProfile::exponential(1.0, 2);
const auto kFlat = WarpingProfile::polynomial(0.0, 4);

// Dirichlet heat kernel of -d^2/dt^2 on [0, L] by the method of images.
double images_kernel(double x, double y, double tau, double L) {
  const auto g = [tau](double d) { return std::exp(-d * d / (4.0 * tau)) / std::sqrt(4.0 * pi * tau); };
  double sum = 0.0;
  for (int n = -20; n <= 20; ++n) sum += g(x - y + 2.0 * n * L) - g(x + y + 2.0 * n * L);
  return sum;
}

// Kernel of (-d^2/dt^2 + 1)^{-m} on the line.
double matern_kernel(double d, int m) {
  const double nu = m - 0.5;
  return std::pow(d / 2.0, nu) * boost::math::cyl_bessel_k(nu, d) / (std::sqrt(pi) * boost::math::tgamma(m));
}

double sup_abs(const Eigen::MatrixXd& A) { return A.cwiseAbs().maxCoeff(); }

std::pair<std::vector<double>, std::vector<double>> flat_laplacian(std::size_t m, double h) {
  return {std::vector<double>(m, 2.0 / (h * h)), std::vector<double>(m - 1, -1.0 / (h * h))};
}

}  // namespace

TEST(HeatMatrix, OneByOne) {
  const std::vector<double> d{2.5}, e{};
  for (double tau : {0.0, 0.3, 4.0}) EXPECT_NEAR(heat_matrix(d, e, tau).E(0, 0), std::exp(-2.5 * tau), 1e-15);
}

TEST(HeatMatrix, SmallTimeSeriesBound) {
  const auto op = assemble_operator(kPoly2, RadialGrid::covering(5.0, 0.05), OperatorKind::DiracSquared);
  const SpectralCalculus calc(op);
  const double norm = tridiag_norm_inf(op.diag, op.offdiag);
  for (double tau : {1e-6, 1e-5, 1e-4}) {
    Eigen::MatrixXd diff = heat_matrix(calc, tau).E - Eigen::MatrixXd::Identity(op.size(), op.size());
    EXPECT_LE(diff.cwiseAbs().rowwise().sum().maxCoeff(), tau * norm * std::exp(tau * norm));
  }
}

TEST(HeatMatrix, FlatClosedFormEigensystem) {
  const std::size_t m = 150;
  const double h = 0.1, tau = 1.0;
  const auto [d, e] = flat_laplacian(m, h);
  const auto E = heat_matrix(d, e, tau).E;
  Eigen::MatrixXd V(m, m);
  Eigen::VectorXd w(m);
  for (std::size_t k = 0; k < m; ++k) {
    w(k) = std::exp(-tau * 2.0 / (h * h) * (1.0 - std::cos((k + 1) * pi / (m + 1))));
    for (std::size_t j = 0; j < m; ++j) V(j, k) = std::sqrt(2.0 / (m + 1)) * std::sin((j + 1) * (k + 1) * pi / (m + 1));
  }
  const Eigen::MatrixXd oracle = V * w.asDiagonal() * V.transpose();
  EXPECT_LE(sup_abs(E - oracle), 1e-8);
}

TEST(HeatKernel, FlatMatchesImagesSeries) {
  const double L = 4.0, h = 0.002, tau = 0.5;
  const RadialGrid grid = RadialGrid::covering(L, h);
  const auto op = assemble_operator(kFlat, grid, OperatorKind::DiracSquared);
  const SpectralCalculus calc(op);
  const std::size_t mid = grid.size() / 2;
  for (std::size_t k = mid - 400; k <= mid + 400; k += 50) {
    const double discrete = heat_kernel_value(op, calc, tau, mid, k);
    EXPECT_NEAR(discrete, images_kernel(grid.node(mid), grid.node(k), tau, grid.t_max()), 1e-6) << k;
  }
}

TEST(HeatKernel, SymmetryAndRowMass) {
  const RadialGrid grid = RadialGrid::covering(10.0, 0.02);
  const auto op = assemble_operator(kPoly2, grid, OperatorKind::DiracSquared);
  const SpectralCalculus calc(op);
  const double tau = 0.7;
  const auto E = heat_matrix(calc, tau).E;
  EXPECT_EQ(E, E.transpose().eval());
  for (std::size_t j = 0; j < grid.size(); j += 37) {
    double mass = 0.0;
    for (std::size_t k = 0; k < grid.size(); ++k) {
      mass += heat_kernel_value(op, calc, tau, j, k) * std::exp(op.log_rho[k]) * grid.h();
    }
    EXPECT_LE(mass, std::exp(op.K1 * tau) * (1.0 + 1e-8));
  }
}

TEST(HeatMatrix, SemigroupLaw) {
  const auto op = assemble_operator(kPoly2, RadialGrid::covering(10.0, 0.02), OperatorKind::DiracSquared);
  const SpectralCalculus calc(op);
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(0.0, 3.0);
  for (int trial = 0; trial < 20; ++trial) {
    const double a = u(rng), b = u(rng);
    const auto Ea = heat_matrix(calc, a).E, Eb = heat_matrix(calc, b).E, Eab = heat_matrix(calc, a + b).E;
    EXPECT_LE(sup_abs(Ea * Eb - Eab), 1e-8 * std::max(1.0, sup_abs(Eab)));
  }
}

TEST(HeatMatrix, ShiftIdentity) {
  const auto op = assemble_operator(kExp1, RadialGrid::covering(10.0, 0.02), OperatorKind::DiracSquared);
  const double c = 0.8;
  std::vector<double> shifted = op.diag;
  for (double& v : shifted) v += c;
  for (double tau : {0.1, 1.0, 5.0}) {
    const auto E = heat_matrix(op.diag, op.offdiag, tau).E;
    const auto Es = heat_matrix(shifted, op.offdiag, tau).E;
    EXPECT_LE(sup_abs(Es - std::exp(-c * tau) * E), 1e-10 * sup_abs(E));
  }
}

TEST(HeatMatrix, ScalarLaplacianIsSubMarkov) {
  const RadialGrid grid = RadialGrid::covering(10.0, 0.02);
  const auto op = assemble_operator(kPoly2, grid, OperatorKind::ScalarLaplacian);
  const SpectralCalculus calc(op);
  for (double tau : {0.1, 1.0, 10.0}) {
    for (std::size_t j = 0; j < grid.size(); j += 23) {
      double mass = 0.0;
      for (std::size_t k = 0; k < grid.size(); ++k) {
        const double v = heat_kernel_value(op, calc, tau, j, k);
        EXPECT_GE(v, -1e-12);
        mass += v * std::exp(op.log_rho[k]) * grid.h();
      }
      EXPECT_LE(mass, 1.0 + 1e-10);
    }
  }
}

TEST(Domination, NonnegativePotentialNeedsNoShift) {
  const auto mild = WarpingProfile::polynomial(0.5, 2);
  const RadialGrid grid = RadialGrid::covering(10.0, 0.02);
  const std::vector<double> taus{0.1, 1.0, 10.0};
  const auto r = domination_check(mild, grid, taus);
  EXPECT_EQ(r.K1, 0.0);
  EXPECT_TRUE(r.passed);
}

TEST(Domination, PolynomialAndExponential) {
  const RadialGrid grid = RadialGrid::covering(10.0, 0.02);
  const std::vector<double> taus{0.1, 1.0, 10.0};
  const auto poly = domination_check(kPoly2, grid, taus);
  EXPECT_TRUE(poly.passed);
  EXPECT_NEAR(poly.K1, 6.0 / std::pow(1.02, 2), 0.1);
  const auto expo = domination_check(kExp1, grid, taus);
  EXPECT_TRUE(expo.passed);
  EXPECT_NEAR(expo.K1, 0.25, 1e-3);
}

TEST(PNorm, IdentityAndContraction) {
  const RadialGrid grid = RadialGrid::covering(10.0, 0.02);
  const auto dirac = assemble_operator(kPoly2, grid, OperatorKind::DiracSquared);
  const std::vector<double> zero{0.0};
  for (double p : {1.0, std::numeric_limits<double>::infinity()}) EXPECT_EQ(pnorm_growth_check(dirac, zero, p).entries[0].norm, 1.0);

  const auto lap = assemble_operator(kPoly2, grid, OperatorKind::ScalarLaplacian);
  const std::vector<double> taus{0.1, 1.0, 10.0};
  for (double p : {1.0, std::numeric_limits<double>::infinity()}) {
    for (const auto& e : pnorm_growth_check(lap, taus, p).entries) EXPECT_LE(e.norm, 1.0 + 1e-10);
  }
  const std::vector<double> one{1.0};
  const auto r = pnorm_growth_check(dirac, one, 1.0);
  EXPECT_TRUE(r.passed);
  EXPECT_LE(r.entries[0].norm, std::exp(6.0) * (1.0 + 1e-8));
}

TEST(GaussianFit, FlatFitNearCriticalRate) {
  const RadialGrid grid = RadialGrid::covering(20.0, 0.01);
  const std::vector<double> taus{0.25, 1.0, 4.0};
  const auto fit = gaussian_bound_fit(kFlat, grid, taus, 0.5);
  EXPECT_TRUE(fit.passed);
  EXPECT_GE(fit.constant("C4"), 4.0);
  EXPECT_LE(fit.constant("C4"), 4.5);
  EXPECT_FALSE(fit.samples.empty());
}

TEST(GaussianFit, ForcedSubcriticalRateIsViolated) {
  const RadialGrid grid = RadialGrid::covering(20.0, 0.01);
  const std::vector<double> taus{0.25, 1.0, 4.0};
  GaussianFitOptions options;
  options.forced_C4 = 3.9;
  const auto fit = gaussian_bound_fit(kFlat, grid, taus, 0.5, options);
  EXPECT_FALSE(fit.passed);
  EXPECT_GT(fit.max_log_violation, 0.0);
}

TEST(GaussianFit, PolynomialFinite) {
  const RadialGrid grid = RadialGrid::covering(20.0, 0.01);
  const std::vector<double> taus{0.25, 1.0, 4.0};
  const auto fit = gaussian_bound_fit(kPoly2, grid, taus, 0.5);
  EXPECT_TRUE(fit.passed);
  EXPECT_TRUE(std::isfinite(fit.constant("C3")));
  EXPECT_GE(fit.constant("C4"), 4.0);
  EXPECT_LE(fit.constant("C4"), 16.0);
}

TEST(MuForm, FiniteFits) {
  const RadialGrid grid = RadialGrid::covering(20.0, 0.01);
  const std::vector<double> taus{0.25, 1.0, 4.0};
  const auto flat = mu_form_bound_fit(kFlat, grid, 1.0, taus);
  EXPECT_TRUE(flat.passed);
  EXPECT_LT(flat.constant("alpha"), 0.0);
  const auto poly = mu_form_bound_fit(kPoly2, grid, 2.0, taus);
  EXPECT_TRUE(poly.passed);
  EXPECT_LT(poly.constant("alpha"), 0.0);
  EXPECT_TRUE(std::isfinite(poly.constant("C")));
}

TEST(MuForm, CompletionOfTheSquare) {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> u(0.01, 10.0);
  for (int trial = 0; trial < 100; ++trial) {
    const double d = u(rng), c = u(rng), tau = u(rng), gamma = u(rng);
    const double gap = gaussian_completion_gap(d, c, tau, gamma);
    const double square = std::pow(d / (2.0 * std::sqrt(c * tau)) - gamma * std::sqrt(c * tau), 2);
    EXPECT_GE(gap, -1e-12 * std::max(1.0, square));
    EXPECT_NEAR(gap, square, 1e-9 * std::max(1.0, square));
  }
}

TEST(Resolvent, OneByOne) {
  const std::vector<double> d{3.0}, e{};
  EXPECT_NEAR(std::abs(resolvent_power_matrix(d, e, -1.0, 2)(0, 0) - 1.0 / 16.0), 0.0, 1e-15);
  EXPECT_THROW(resolvent_power_matrix(d, e, 3.0, 1), NumericError);
}

TEST(Resolvent, FirstPowerInvertsShiftedOperator) {
  const auto op = assemble_operator(kPoly2, RadialGrid::covering(10.0, 0.05), OperatorKind::DiracSquared);
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> re(-5.0, 5.0), im(0.1, 2.0);
  const std::size_t m = op.size();
  Eigen::MatrixXd T = Eigen::MatrixXd::Zero(m, m);
  for (std::size_t j = 0; j < m; ++j) {
    T(j, j) = op.diag[j];
    if (j + 1 < m) T(j, j + 1) = T(j + 1, j) = op.offdiag[j];
  }
  for (int trial = 0; trial < 10; ++trial) {
    const Complex xi(re(rng), trial % 2 ? im(rng) : -im(rng));
    const Eigen::MatrixXcd G = resolvent_power_matrix(op.diag, op.offdiag, xi, 1);
    const Eigen::MatrixXcd shifted = T.cast<Complex>() - xi * Eigen::MatrixXcd::Identity(m, m);
    EXPECT_LE((shifted * G - Eigen::MatrixXcd::Identity(m, m)).cwiseAbs().maxCoeff(), 1e-8);
  }
}

TEST(Resolvent, FlatFirstPowerDecaysAtUnitRate) {
  const auto op = assemble_operator(kFlat, RadialGrid::covering(20.0, 0.01), OperatorKind::DiracSquared);
  const auto r = resolvent_power_kernel(op, kFlat, -1.0, 1);
  EXPECT_TRUE(r.fit.passed);
  EXPECT_NEAR(r.fit.constant("epsilon"), 1.0, 0.05);
}

TEST(Resolvent, FlatSeventhPowerMatchesMaternKernel) {
  const double L = 40.0, h = 0.02;
  const RadialGrid grid = RadialGrid::covering(L, h);
  const auto op = assemble_operator(kFlat, grid, OperatorKind::DiracSquared);
  ResolventOptions options;
  options.keep_matrix = true;
  const auto r = resolvent_power_kernel(op, kFlat, -1.0, 7, options);
  EXPECT_TRUE(r.fit.passed);
  EXPECT_GT(r.fit.constant("epsilon"), 0.0);
  const std::size_t mid = grid.size() / 2;
  const double peak = matern_kernel(1e-3, 7);
  for (std::size_t k = mid + 25; k <= mid + 500; k += 25) {
    const double d = grid.node(k) - grid.node(mid);
    EXPECT_NEAR(r.G(mid, k).real(), matern_kernel(d, 7), 1e-5 * peak) << d;
    EXPECT_NEAR(r.G(mid, k).imag(), 0.0, 1e-12);
  }
}

TEST(Resolvent, ComplexShiftInsideWindow) {
  const auto op = assemble_operator(kFlat, RadialGrid::covering(20.0, 0.01), OperatorKind::DiracSquared);
  const Complex xi(2.0, 0.5);
  const auto r = resolvent_power_kernel(op, kFlat, xi, 1);
  EXPECT_TRUE(r.fit.passed);
  // the continuum kernel decays like e^{-Im sqrt(xi) d}
  EXPECT_NEAR(r.fit.constant("epsilon"), std::sqrt(xi).imag(), 0.1);
}

TEST(Laplace, ScalarCases) {
  const std::vector<double> d{3.0}, e{};
  EXPECT_LE(resolvent_laplace_check(d, e, -1.0, 2, 200.0).relative_error, 1e-8);
  EXPECT_LE(resolvent_laplace_check(d, e, -1.0, 4, 200.0).relative_error, 1e-8);
}

TEST(Laplace, FlatSixthPower) {
  const auto [d, e] = flat_laplacian(200, 0.1);
  const auto r = resolvent_laplace_check(d, e, -2.0, 6, 200.0);
  EXPECT_LE(r.relative_error, 1e-6);
  EXPECT_LE(r.tau_max_required, r.tau_max_used);
}
