// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any criterion fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "speclab/geometry.hpp"
#include "speclab/heat.hpp"
#include "speclab/numeric.hpp"
#include "speclab/operators.hpp"
#include "speclab/weyl.hpp"

using namespace speclab;

namespace {

constexpr double kPi = 3.14159265358979323846;

const auto kPoly2 = WarpingProfile::polynomial(2.0, 4);
const auto kExp1 = WarpingProfile::exponential(1.0, 2);

struct Outcome {
  bool passed = false;
  std::string detail;
};

class Detail {
 public:
  template <class T>
  Detail& operator<<(const T& v) {
    out_ << v;
    return *this;
  }
  std::string str() const { return out_.str(); }

 private:
  std::ostringstream out_;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// 1 -------------------------------------------------------------------------------------------
Outcome weyl_bound_audit() {
  const auto start = std::chrono::steady_clock::now();
  const RadialGrid grid = RadialGrid::covering(330.0, 0.01);
  const std::vector<double> Ts{10, 20, 40, 80};
  int violations = 0;
  bool slopes_ok = true;
  Detail d;
  for (double lambda : {0.0, 1.0, 5.0}) {
    std::vector<double> q;
    for (double T : Ts) {
      const auto w = weyl_quotient_p(lambda, T, 1.0, grid, kPoly2);
      const double bound = 7.0 * std::pow(kPoly2.eval(4.0 * T).f, 3) / (T * std::pow(kPoly2.eval(2.0 * T).f, 3));
      if (!(w.quotient <= bound)) ++violations;
      q.push_back(w.quotient);
    }
    const double slope = loglog_slope(Ts, q);
    slopes_ok = slopes_ok && slope >= -1.3 && slope <= -0.7;
    d << "slope(lambda=" << lambda << ")=" << slope << " ";
  }
  const double elapsed = seconds_since(start);
  d << "violations=" << violations << " runtime=" << elapsed << "s";
  return {violations == 0 && slopes_ok && elapsed < 10.0, d.str()};
}

// 2 -------------------------------------------------------------------------------------------
Outcome spectral_fill_oracle() {
  const auto start = std::chrono::steady_clock::now();
  bool ok = true;
  double worst = 0.0;
  Detail d;
  const std::vector<std::pair<double, int>> profiles{{2.0, 4}, {1.0, 3}, {0.5, 2}, {3.0, 4}};
  for (const auto& [k, n] : profiles) {
    const auto profile = WarpingProfile::polynomial(k, n);
    double gaps[2];
    int slot = 0;
    for (double T : {100.0, 200.0}) {
      const auto w = spectrum_window(profile, T, 1.0, T / 5000.0);
      if (w.eigenvalues.size() < 20) ok = false;
      for (std::size_t j = 0; j < std::min<std::size_t>(20, w.eigenvalues.size()); ++j) {
        const double exact = std::pow((j + 1) * kPi / w.T_max, 2);
        worst = std::max(worst, std::abs(w.eigenvalues[j] - exact) / exact);
      }
      gaps[slot++] = w.max_gap;
    }
    const double ratio = gaps[0] / gaps[1];
    ok = ok && ratio >= 1.7 && ratio <= 2.3;
    d << "gap_ratio(k=" << k << ",n=" << n << ")=" << ratio << " ";
  }
  const double elapsed = seconds_since(start);
  d << "max_rel_err=" << worst << " runtime=" << elapsed << "s";
  return {ok && worst <= 1e-3 && elapsed < 60.0, d.str()};
}

// 3, 4 ----------------------------------------------------------------------------------------
const RadialGrid& thousand_grid() {
  static const RadialGrid grid(0.01, 2000);
  return grid;
}

Outcome domination_audit() {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<double> taus{0.1, 1.0, 10.0};
  const auto poly = domination_check(kPoly2, thousand_grid(), taus);
  const auto expo = domination_check(kExp1, thousand_grid(), taus);
  const double elapsed = seconds_since(start);
  Detail d;
  d << "K1(poly)=" << poly.K1 << " rel_violation=" << poly.max_relative_violation << " K1(exp)=" << expo.K1
    << " rel_violation=" << expo.max_relative_violation << " m=" << thousand_grid().size() << " runtime=" << elapsed
    << "s";
  return {poly.passed && expo.passed && elapsed < 120.0, d.str()};
}

Outcome pnorm_audit() {
  const std::vector<double> taus{0.1, 1.0, 10.0};
  bool ok = true;
  Detail d;
  for (const auto& [name, profile] : {std::pair{"poly", kPoly2}, std::pair{"exp", kExp1}}) {
    const auto op = assemble_operator(profile, thousand_grid(), OperatorKind::DiracSquared);
    const SpectralCalculus calc(op);
    for (double p : {1.0, std::numeric_limits<double>::infinity()}) {
      const auto r = pnorm_growth_check(op, calc, taus, p);
      ok = ok && r.passed;
      d << name << "(p=" << p << ") max_scaled=" << r.max_scaled << " ";
    }
  }
  return {ok, d.str()};
}

// 5 -------------------------------------------------------------------------------------------
struct FitSet {
  double C3, C4, C_heat1, alpha1, C_heat2, alpha2, C_res, eps;
  bool finite;
};

FitSet run_fits(double h) {
  const RadialGrid grid = RadialGrid::covering(20.0, h);
  const auto op = assemble_operator(kPoly2, grid, OperatorKind::DiracSquared);
  const SpectralCalculus calc(op);
  const std::vector<double> taus{0.25, 1.0, 4.0};
  const auto g = gaussian_bound_fit(kPoly2, op, calc, taus, 0.5);
  const auto m1 = mu_form_bound_fit(kPoly2, op, calc, 1.0, taus);
  const auto m2 = mu_form_bound_fit(kPoly2, op, calc, 2.0, taus);
  const auto r = resolvent_power_kernel(op, calc, kPoly2, Complex(-1.0, 0.0), kPoly2.dimension() + 3);
  FitSet f{g.constant("C3"), g.constant("C4"), m1.constant("C"), m1.constant("alpha"), m2.constant("C"),
           m2.constant("alpha"), r.fit.constant("C"), r.fit.constant("epsilon"), false};
  f.finite = g.passed && m1.passed && m2.passed && r.fit.passed && std::isfinite(f.C3) && f.C4 >= 4.0 &&
             f.C4 <= 16.0 && std::isfinite(f.C_heat1) && f.alpha1 < 0.0 && std::isfinite(f.C_heat2) &&
             f.alpha2 < 0.0 && std::isfinite(f.C_res) && f.eps > 0.0;
  return f;
}

Outcome gaussian_form_fits() {
  const auto a = run_fits(0.01);
  const auto b = run_fits(0.005);
  const double pairs[][2] = {{a.C3, b.C3},           {a.C4, b.C4},       {a.C_heat1, b.C_heat1},
                             {a.alpha1, b.alpha1},   {a.C_heat2, b.C_heat2}, {a.alpha2, b.alpha2},
                             {a.C_res, b.C_res},     {a.eps, b.eps}};
  double worst = 0.0;
  for (const auto& p : pairs) worst = std::max(worst, std::abs(p[1] - p[0]) / std::abs(p[0]));
  Detail d;
  d << "C3=" << a.C3 << "/" << b.C3 << " C4=" << a.C4 << "/" << b.C4 << " heat42(beta=1) C=" << a.C_heat1
    << " alpha=" << a.alpha1 << " heat42(beta=2) C=" << a.C_heat2 << " alpha=" << a.alpha2 << " res1 C=" << a.C_res
    << " eps=" << a.eps << "/" << b.eps << " max_rel_change=" << worst;
  return {a.finite && b.finite && worst < 0.10, d.str()};
}

// 6 -------------------------------------------------------------------------------------------
Outcome leibniz_convergence() {
  std::mt19937_64 rng(2024);
  std::normal_distribution<double> n(0.0, 1.0);
  std::uniform_real_distribution<double> w(0.2, 1.5);
  double lo = INFINITY, hi = -INFINITY;
  for (int trial = 0; trial < 20; ++trial) {
    const double a1 = n(rng), a2 = n(rng), w1 = w(rng), w2 = w(rng), w3 = w(rng);
    const Complex c(n(rng), n(rng));
    double res[2];
    int k = 0;
    for (double h : {0.02, 0.01}) {
      const RadialGrid grid = RadialGrid::covering(20.0, h);
      std::vector<double> eta(grid.size());
      RadialSection phi(grid);
      for (std::size_t j = 0; j < grid.size(); ++j) {
        const double t = grid.node(j);
        eta[j] = 1.0 + 0.3 * a1 * std::sin(w1 * t) + 0.3 * a2 * std::cos(w2 * t);
        phi.values[j] = c * std::exp(Complex(0.0, w3 * t)) + 1.0 / (1.0 + t);
      }
      res[k++] = leibniz_identity_check(eta, phi, 0.5, kPoly2);
    }
    lo = std::min(lo, res[0] / res[1]);
    hi = std::max(hi, res[0] / res[1]);
  }
  Detail d;
  d << "ratio range [" << lo << ", " << hi << "] over 20 pairs";
  return {lo >= 3.0 && hi <= 5.0, d.str()};
}

// 7 -------------------------------------------------------------------------------------------
Outcome kato_pointwise() {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> n(0.0, 1.0);
  std::uniform_int_distribution<int> f(1, 6);
  std::uniform_real_distribution<double> rate(-3.0, 3.0);
  const double T = 20.0;
  const RadialGrid grid = RadialGrid::covering(T, 0.01);
  int failures = 0;
  double worst = -INFINITY;
  for (const auto& profile : {kPoly2, kExp1}) {
    for (int trial = 0; trial < 100; ++trial) {
      Complex amp[4];
      int freq[4];
      for (int i = 0; i < 4; ++i) {
        amp[i] = Complex(n(rng), n(rng));
        freq[i] = f(rng);
      }
      const double w = rate(rng);
      RadialSection u(grid);
      for (std::size_t j = 0; j < grid.size(); ++j) {
        const double t = grid.node(j);
        Complex s = 0.0;
        for (int i = 0; i < 4; ++i) s += amp[i] * std::sin(freq[i] * kPi * t / T);
        u.values[j] = s * std::exp(Complex(0.0, w * t));
      }
      const auto k = kato_pointwise_check(u, profile);
      if (!k.passed) ++failures;
      worst = std::max(worst, k.max_violation / k.slack);
    }
  }
  Detail d;
  d << "sections=200 failures=" << failures << " max violation/slack=" << worst;
  return {failures == 0, d.str()};
}

// 8 -------------------------------------------------------------------------------------------
Outcome harmonic_certificates() {
  const RadialGrid grid = RadialGrid::covering(400.0, 0.01);
  double poly_err = 0.0, exp_err = 0.0;
  std::vector<double> certs;
  for (double R : {1.0, 2.0, 4.0, 8.0, 16.0, 32.0, 64.0, 128.0}) {
    const double c = asymptotically_harmonic_family(kPoly2, R, grid).certificate;
    poly_err = std::max(poly_err, std::abs(c - 6.0 / ((1.0 + R) * (1.0 + R))));
    certs.push_back(c);
    exp_err = std::max(exp_err, std::abs(asymptotically_harmonic_family(kExp1, R, grid).certificate - 0.25));
  }
  Detail d;
  d << "poly max|cert - 6/(1+R)^2|=" << poly_err << " exp max|cert - 1/4|=" << exp_err
    << " poly last=" << certs.back();
  return {poly_err <= 1e-15 && exp_err <= 1e-15 && trends_to_zero(certs), d.str()};
}

// 9 -------------------------------------------------------------------------------------------
Outcome p_dependence_contrast() {
  const auto start = std::chrono::steady_clock::now();
  const RadialGrid grid = RadialGrid::covering(330.0, 0.05);
  const std::vector<double> Ts{10, 20, 40, 80};
  const std::vector<Complex> off{{1.0, -0.5}};
  const std::vector<Complex> poly_z{{1.0, -0.5}, {1.0, 0.0}};
  const auto expo = spectral_region_map(kExp1, 1.0, off, Ts, grid);
  const auto poly = spectral_region_map(kPoly2, 1.0, poly_z, Ts, grid);
  const double elapsed = seconds_since(start);
  Detail d;
  d << "exp(1-0.5i)=" << to_string(expo.cells[0].classification) << " poly(1-0.5i)="
    << to_string(poly.cells[0].classification) << " poly(1)=" << to_string(poly.cells[1].classification)
    << " runtime=" << elapsed << "s";
  return {expo.cells[0].classification == RegionClass::Decays &&
              poly.cells[0].classification == RegionClass::Stalls &&
              poly.cells[1].classification == RegionClass::Decays && elapsed < 120.0,
          d.str()};
}

// 10 ------------------------------------------------------------------------------------------
Outcome generalized_criterion() {
  const RadialGrid grid = RadialGrid::covering(1800.0, 0.01);
  const auto op = assemble_operator(kPoly2, grid, OperatorKind::DiracSquared);
  bool ok = true;
  Detail d;
  for (double lambda : {0.5, 2.0}) {
    std::vector<double> q;
    for (int i = 1; i <= 8; ++i) q.push_back(generalized_weyl_quotient(lambda, build_eta_i(lambda, chi_schedule(i), grid), op));
    ok = ok && strictly_decreasing(std::span<const double>(q).subspan(2));
    d << "lambda=" << lambda << ": i=3 " << q[2] << " -> i=8 " << q[7] << " ";
  }
  return {ok, d.str()};
}

// 11 ------------------------------------------------------------------------------------------
Outcome subexponential_audits() {
  const std::vector<double> radii{1, 2, 4, 8, 16, 32, 64, 128, 256, 512, 1024, 2048};
  const std::vector<double> centers{0, 1, 5, 10, 50};
  bool ok = true;
  Detail d;
  for (double eps : {0.05, 0.1, 0.5}) {
    const auto v = check_subexponential(kPoly2, eps, radii, centers);
    ok = ok && v.passed;
    d << "poly(eps=" << eps << ")=" << (v.passed ? "pass" : "fail") << " ";
  }
  const auto e = check_subexponential(kExp1, 0.5, radii, centers);
  const auto s = sturm_integral(kExp1, 0.1, centers);
  d << "exp(eps=0.5)=" << (e.passed ? "pass" : "fail") << " exp sturm(beta=0.1)=" << (s.finite ? "finite" : "divergent");
  return {ok && !e.passed && !s.finite, d.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"Weyl bound audit", weyl_bound_audit},
      {"Spectral fill oracle", spectral_fill_oracle},
      {"Domination audit", domination_audit},
      {"p-to-p growth audit", pnorm_audit},
      {"Gaussian-form fits", gaussian_form_fits},
      {"Cut-off product identity convergence", leibniz_convergence},
      {"Kato pointwise inequality", kato_pointwise},
      {"Asymptotically harmonic hypothesis audit", harmonic_certificates},
      {"p-dependence contrast", p_dependence_contrast},
      {"Generalized Weyl criterion", generalized_criterion},
      {"Subexponential audits", subexponential_audits},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.passed) ++failed;
    std::printf("%s  %2zu  %-42s %s\n", o.passed ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
