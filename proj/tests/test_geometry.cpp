#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "speclab/errors.hpp"
#include "speclab/geometry.hpp"

using namespace speclab;

namespace {

const auto kPoly2 = WarpingProfile::polynomial(2.0, 4);
const auto kExp1 = WarpingProfile::exponential(1.0, 2);
const auto kFlat = WarpingProfile::polynomial(0.0, 3);

}  // namespace

TEST(Profile, PolynomialValuesAtOne) {
  const auto v = WarpingProfile::polynomial(2.0, 2).eval(1.0);
  EXPECT_DOUBLE_EQ(v.f, 4.0);
  EXPECT_DOUBLE_EQ(v.f_prime, 4.0);
  EXPECT_DOUBLE_EQ(v.f_double_prime, 2.0);
}

TEST(Profile, ExponentialAtZero) {
  const auto v = WarpingProfile::exponential(1.0, 2).eval(0.0);
  EXPECT_DOUBLE_EQ(v.f, 1.0);
  EXPECT_DOUBLE_EQ(v.f_prime, 1.0);
  EXPECT_DOUBLE_EQ(v.f_double_prime, 1.0);
}

TEST(Profile, QuasiPolynomialMatchesSymbolicDerivative) {
  const double beta = 0.25;
  const auto p = WarpingProfile::quasi_polynomial(beta, 2);
  EXPECT_DOUBLE_EQ(p.eval(0.0).f, 1.0);
  EXPECT_DOUBLE_EQ(p.eval(0.0).f_prime, 0.0);
  // f = exp(b L^2), L = ln(1+t): f' = f 2bL/(1+t), f'' = f [(2bL/(1+t))^2 + 2b(1 - L)/(1+t)^2]
  for (double t : {0.5, 3.0, 40.0}) {
    const double L = std::log1p(t);
    const double f = std::exp(beta * L * L);
    const double g = 2.0 * beta * L / (1.0 + t);
    const auto v = p.eval(t);
    EXPECT_NEAR(v.f, f, 1e-13 * f);
    EXPECT_NEAR(v.f_prime, f * g, 1e-13 * f);
    EXPECT_NEAR(v.f_double_prime, f * (g * g + 2.0 * beta * (1.0 - L) / ((1.0 + t) * (1.0 + t))), 1e-12 * f);
  }
}

TEST(Profile, PositiveAndNondecreasing) {
  for (const auto& p : {kPoly2, kExp1, kFlat, WarpingProfile::quasi_polynomial(0.2, 3)}) {
    EXPECT_TRUE(p.nondecreasing_on(100.0, 0.1)) << p.describe();
    for (double t = 0.0; t < 100.0; t += 0.37) EXPECT_GT(p.eval(t).f, 0.0);
  }
}

TEST(Profile, TabulatedTracksSamplesAndRejectsOutside) {
  std::vector<double> samples;
  const double dt = 0.05;
  for (int i = 0; i <= 400; ++i) samples.push_back(std::pow(1.0 + i * dt, 2));
  const auto tab = WarpingProfile::tabulated(dt, samples, 4);
  for (double t : {0.5, 3.3, 12.0}) {
    EXPECT_NEAR(tab.eval(t).f, std::pow(1.0 + t, 2), 1e-5 * std::pow(1.0 + t, 2));
    EXPECT_NEAR(tab.eval(t).f_double_prime, 2.0, 2e-2);
  }
  EXPECT_THROW(tab.eval(25.0), DomainError);
  samples[10] = -1.0;
  EXPECT_THROW(WarpingProfile::tabulated(dt, samples, 4), DomainError);
}

TEST(Density, Examples) {
  EXPECT_DOUBLE_EQ(radial_density(kPoly2, 1.0), 64.0);
  EXPECT_NEAR(radial_density(WarpingProfile::exponential(1.0, 3), 2.0), std::exp(4.0), 1e-12 * std::exp(4.0));
  const auto n2 = WarpingProfile::polynomial(1.5, 2);
  EXPECT_DOUBLE_EQ(radial_density(n2, 2.0), n2.eval(2.0).f);
}

TEST(Connection, Examples) {
  for (double t : {0.0, 1.0, 7.0}) EXPECT_DOUBLE_EQ(kExp1.connection(t), 0.5);
  EXPECT_DOUBLE_EQ(kPoly2.connection(0.0), 3.0);
  EXPECT_DOUBLE_EQ(kFlat.connection(4.0), 0.0);
}

TEST(BallVolume, Examples) {
  EXPECT_NEAR(ball_volume(kFlat, 5.0).value, 5.0, 1e-12);
  EXPECT_NEAR(ball_volume(WarpingProfile::polynomial(2.0, 2), 1.0).value, 7.0 / 3.0, 1e-10);
  EXPECT_NEAR(ball_volume(kExp1, 1.0).value, std::exp(1.0) - 1.0, 1e-9);
}

TEST(BallVolume, MonotoneOverRandomPairs) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> r(0.0, 30.0);
  for (const auto& p : {kPoly2, kExp1, kFlat}) {
    for (int i = 0; i < 100; ++i) {
      double a = r(rng), b = r(rng);
      if (a > b) std::swap(a, b);
      EXPECT_LE(ball_volume(p, a).value, ball_volume(p, b).value);
    }
  }
}

TEST(BallVolume, SimpsonRichardsonRatio) {
  const auto p = WarpingProfile::quasi_polynomial(0.25, 4);
  const double r = 3.0;
  const double v1 = ball_volume(p, r, 0.1).value;
  const double v2 = ball_volume(p, r, 0.05).value;
  const double v3 = ball_volume(p, r, 0.025).value;
  const double ratio = (v1 - v2) / (v2 - v3);
  EXPECT_GE(ratio, 12.0);
  EXPECT_LE(ratio, 20.0);
}

TEST(Subexponential, PolynomialPassesEveryEpsilon) {
  const std::vector<double> radii{1, 2, 4, 8, 16, 32, 64, 128, 256, 512, 1024, 2048};
  const std::vector<double> centers{0, 1, 5, 10, 50};
  for (double eps : {0.05, 0.1, 0.5}) {
    EXPECT_TRUE(check_subexponential(kPoly2, eps, radii, centers).passed) << eps;
  }
}

TEST(Subexponential, ExponentialFailsBelowGrowthRate) {
  const std::vector<double> radii{1, 2, 4, 8, 16, 32, 64};
  const std::vector<double> centers{0, 5, 10};
  for (double eps : {0.1, 0.5, 0.9}) {
    EXPECT_FALSE(check_subexponential(kExp1, eps, radii, centers).passed) << eps;
  }
}

TEST(Subexponential, FlatPasses) {
  const std::vector<double> radii{1, 2, 4, 8, 16, 32, 64, 128};
  const std::vector<double> centers{0, 10, 100};
  const auto v = check_subexponential(kFlat, 0.1, radii, centers);
  EXPECT_TRUE(v.passed);
  EXPECT_LE(v.fitted_C, 2.0 * std::exp(1.0) / 0.1);
}

TEST(GrowthCondition, PolynomialValueAndTrend) {
  const std::vector<double> ts{8.0};
  const double exact = std::pow(17.0, 6) / (8.0 * std::pow(9.0, 6));
  EXPECT_NEAR(check_growth_condition(kPoly2, ts).g[0], exact, 1e-12 * exact);
  const std::vector<double> many{10, 100, 1000, 10000};
  for (double k : {0.0, 1.0, 2.0, 3.0}) {
    EXPECT_TRUE(check_growth_condition(WarpingProfile::polynomial(k, 4), many).tends_to_zero) << k;
  }
  EXPECT_TRUE(check_growth_condition(WarpingProfile::quasi_polynomial(0.25, 4), many).tends_to_zero);
  EXPECT_FALSE(check_growth_condition(kExp1, many).tends_to_zero);
}

TEST(Ricci, Examples) {
  for (double t : {0.0, 2.0, 9.0}) {
    EXPECT_DOUBLE_EQ(radial_ricci(WarpingProfile::exponential(1.0, 3), t), -2.0);
    EXPECT_NEAR(radial_ricci(kPoly2, t), -6.0 / ((1 + t) * (1 + t)), 1e-14);
    EXPECT_EQ(radial_ricci(WarpingProfile::polynomial(1.0, 5), t), 0.0);
  }
  const std::vector<double> ts{10, 100, 1000};
  const auto audit = ricci_audit(kPoly2, ts);
  EXPECT_TRUE(audit.delta_to_zero);
  EXPECT_NEAR(audit.delta_t2[2], 2.0 * 1e6 / (1001.0 * 1001.0), 1e-12);
}

TEST(Bishop, FlatRatioNeedsNoExponential) {
  const std::vector<RadiusPair> pairs{{1.0, 2.0}};
  const std::vector<double> centers{10.0};
  const auto b = bishop_check(kFlat, 0.0, pairs, centers);
  EXPECT_EQ(b.C, 0.0);
}

TEST(Bishop, PolynomialAndExponentialPass) {
  std::vector<RadiusPair> pairs;
  for (double R = 1.0; R <= 4096.0; R *= 2.0) {
    pairs.push_back({R / 2.0, R});
    pairs.push_back({R / 4.0, R});
  }
  const std::vector<double> centers{0, 1, 5, 10, 50};
  const auto poly = bishop_check(kPoly2, 6.0, pairs, centers);
  EXPECT_TRUE(poly.passed);
  EXPECT_TRUE(std::isfinite(poly.C));
  const auto expo = bishop_check(kExp1, 1.0, pairs, centers);
  EXPECT_TRUE(expo.passed);
  // (R/4, R) pairs at far centers give excess 3R/4 - O(log R)
  EXPECT_LE(expo.C, 0.75 + 1e-9);
}

TEST(Bishop, RicciViolationNamesOffendingRadius) {
  const std::vector<RadiusPair> pairs{{1.0, 2.0}};
  const std::vector<double> centers{0.0};
  try {
    bishop_check(kPoly2, 1.0, pairs, centers);
    FAIL() << "expected PreconditionError";
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("at t = "), std::string::npos);
  }
}

TEST(Sturm, FiniteAndDivergentCases) {
  const std::vector<double> centers{0, 5, 10, 20, 40};
  EXPECT_TRUE(sturm_integral(kFlat, 0.5, centers).finite);
  EXPECT_TRUE(sturm_integral(kPoly2, 1.0, centers).finite);
  EXPECT_FALSE(sturm_integral(kExp1, 0.1, centers).finite);
}

TEST(Sturm, FlatMatchesClosedForm) {
  // V(t0, 1) = 2 away from the origin, so mu^2 = 1/2 and the integral is 2 mu^2 / beta
  const std::vector<double> centers{400.0};
  SturmOptions options;
  options.T0 = 800.0;
  options.doublings = 1;
  const auto s = sturm_integral(kFlat, 0.5, centers, options);
  EXPECT_NEAR(std::exp(s.log_sup.back()), 0.5 * 2.0 / 0.5, 1e-3);
}
