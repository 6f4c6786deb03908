#include <chrono>
#include <cmath>
#include <ctime>
#include <iomanip>
#include <map>
#include <sstream>

#include "speclab/errors.hpp"
#include "speclab/harness.hpp"
#include "speclab/heat.hpp"
#include "speclab/numeric.hpp"
#include "speclab/operators.hpp"
#include "speclab/parallel.hpp"
#include "speclab/weyl.hpp"

namespace speclab {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

using Values = std::vector<std::pair<std::string, double>>;

void add_verdict(ExperimentReport& report, std::string name, std::string inequality, std::string anchor,
                 bool passed, Values values) {
  report.verdicts.push_back({std::move(name), std::move(inequality), std::move(anchor), passed, std::move(values)});
}

// Runners hold references to several tables at once; no experiment emits more than this many.
constexpr std::size_t kMaxTables = 16;

Table& add_table(ExperimentReport& report, std::string name, std::vector<std::string> columns) {
  if (report.tables.size() >= kMaxTables) throw NumericError("too many report tables");
  report.tables.push_back({std::move(name), std::move(columns), {}});
  return report.tables.back();
}

// Short form for verdict names; full precision goes in the values.
std::string fmt(double v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

std::string timestamp_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

// ---------------------------------------------------------------------------------------------

void run_growth(const ExperimentConfig& config, const GrowthParams& p, ExperimentReport& report) {
  const auto profile = config.profile.build();

  const auto ricci = ricci_audit(profile, p.t_list);
  auto& rt = add_table(report, "ricci", {"t", "delta", "delta_t2"});
  for (std::size_t i = 0; i < ricci.t.size(); ++i) rt.rows.push_back({ricci.t[i], ricci.delta[i], ricci.delta_t2[i]});

  auto& st = add_table(report, "subexponential",
                       {"epsilon", "r_max", "fitted_C", "log_fitted_C", "divergence_trend", "passed"});
  for (double eps : p.epsilon) {
    SubexponentialOptions options;
    options.volume_step = p.volume_step;
    const auto v = check_subexponential(profile, eps, p.r_grid, p.centers, options);
    st.rows.push_back({eps, v.r_max, v.fitted_C, v.log_fitted_C, v.divergence_trend, v.passed ? 1.0 : 0.0});
    add_verdict(report, "subexponential eps=" + fmt(eps), "V(x, r) <= C V(x, 1) e^{eps r} uniformly in x",
                "uniformly subexponential volume growth", v.passed,
                {{"epsilon", eps}, {"fitted_C", v.fitted_C}, {"log_fitted_C", v.log_fitted_C},
                 {"divergence_trend", v.divergence_trend}, {"r_max", v.r_max}});
  }

  const auto growth = check_growth_condition(profile, p.t_list);
  auto& gt = add_table(report, "growth_condition", {"t", "g"});
  for (std::size_t i = 0; i < growth.t.size(); ++i) gt.rows.push_back({growth.t[i], growth.g[i]});
  add_verdict(report, "growth condition", "f^{n-1}(2t) / (t f^{n-1}(t)) -> 0 as t -> inf",
              "growth condition on the warping function", growth.tends_to_zero,
              {{"g_first", growth.g.front()}, {"g_last", growth.g.back()}});

  double K0 = 0.0;
  if (p.K0) {
    K0 = *p.K0;
  } else {
    double reach = 0.0;
    for (double c : p.centers) reach = std::max(reach, c);
    double R_max = 0.0;
    for (const auto& pair : p.radius_pairs) R_max = std::max(R_max, pair.R);
    const double n1 = static_cast<double>(profile.dimension() - 1);
    for (double t = 0.0; t <= reach + R_max; t += p.volume_step) {
      K0 = std::max(K0, n1 * profile.eval_log(t).f2_over_f);
    }
  }
  const auto bishop = bishop_check(profile, K0, p.radius_pairs, p.centers, p.volume_step);
  auto& bt = add_table(report, "bishop", {"prefix", "C"});
  for (std::size_t i = 0; i < bishop.nested_C.size(); ++i) {
    bt.rows.push_back({static_cast<double>(i + 1), bishop.nested_C[i]});
  }
  add_verdict(report, "volume comparison", "V(x, R) / V(x, r) <= (R/r)^n e^{C sqrt(K0) R}",
              "volume comparison under Ric >= -K0", bishop.passed,
              {{"K0", bishop.K0}, {"C", bishop.C}, {"volcom3_C", bishop.volcom3_C},
               {"volcom3_Cbar", bishop.volcom3_Cbar}, {"volcom4_C", bishop.volcom4_C}});

  SturmOptions sturm_options;
  sturm_options.T0 = p.sturm_T0;
  sturm_options.doublings = p.sturm_doublings;
  sturm_options.step = p.volume_step;
  const auto sturm = sturm_integral(profile, p.sturm_beta, p.centers, sturm_options);
  auto& tt = add_table(report, "sturm", {"T", "log_sup"});
  for (std::size_t i = 0; i < sturm.T_audit.size(); ++i) tt.rows.push_back({sturm.T_audit[i], sturm.log_sup[i]});
  add_verdict(report, "sturm integral beta=" + fmt(p.sturm_beta),
              "sup_x int mu(x) mu(y) e^{-beta d(x, y)} dy < inf", "uniform integrability of mu e^{-beta d}",
              sturm.finite,
              {{"beta", p.sturm_beta}, {"log_sup_last", sturm.log_sup.back()},
               {"T_last", sturm.T_audit.back()}});
}

// ---------------------------------------------------------------------------------------------

void run_spectrum(const ExperimentConfig& config, const SpectrumParams& p, ExperimentReport& report,
                  std::size_t threads) {
  const auto profile = config.profile.build();
  std::vector<SpectrumWindow> windows(p.T_list.size());
  parallel_for(windows.size(), threads,
               [&](std::size_t i) { windows[i] = spectrum_window(profile, p.T_list[i], p.lambda_max, config.grid.h); });

  auto& spec = add_table(report, "spectrum", {"T_max", "h", "index", "eigenvalue", "flat_value", "relative_error"});
  auto& gaps = add_table(report, "gaps", {"T_max", "h", "lambda_max", "count", "max_gap", "gap_bound"});
  for (const auto& w : windows) {
    double worst = 0.0;
    for (std::size_t j = 0; j < w.eigenvalues.size(); ++j) {
      const double flat = std::pow(static_cast<double>(j + 1) * M_PI / w.T_max, 2);
      const double rel = std::abs(w.eigenvalues[j] - flat) / flat;
      if (static_cast<int>(j) < p.oracle_count) worst = std::max(worst, rel);
      spec.rows.push_back({w.T_max, w.h, static_cast<double>(j + 1), w.eigenvalues[j], flat, rel});
    }
    const double bound = 4.0 * M_PI / w.T_max;
    gaps.rows.push_back({w.T_max, w.h, w.lambda_max, static_cast<double>(w.eigenvalues.size()), w.max_gap, bound});
    const std::size_t audited = std::min(w.eigenvalues.size(), static_cast<std::size_t>(p.oracle_count));
    add_verdict(report, "flat oracle T_max=" + fmt(w.T_max),
                "|lambda_j - (j pi / T_max)^2| <= 1e-3 (j pi / T_max)^2 for j <= " + std::to_string(p.oracle_count),
                "spectrum of the kernel-sector D^2 is [0, inf)", audited > 0 && worst <= 1e-3,
                {{"T_max", w.T_max}, {"h", w.h}, {"max_relative_error", worst},
                 {"audited", static_cast<double>(audited)}, {"count", static_cast<double>(w.eigenvalues.size())}});
    add_verdict(report, "gap bound T_max=" + fmt(w.T_max), "max_gap <= 4 pi / T_max",
                "spectrum of the kernel-sector D^2 is [0, inf)", w.max_gap <= bound,
                {{"T_max", w.T_max}, {"max_gap", w.max_gap}, {"bound", bound}});
  }
  for (std::size_t i = 0; i + 1 < windows.size(); ++i) {
    const double ratio_T = windows[i + 1].T_max / windows[i].T_max;
    if (std::abs(ratio_T - 2.0) > 1e-6) continue;
    const double ratio = windows[i].max_gap / windows[i + 1].max_gap;
    add_verdict(report, "gap halving " + fmt(windows[i].T_max) + "->" + fmt(windows[i + 1].T_max),
                "max_gap(T) / max_gap(2T) in [1.7, 2.3]", "spectrum of the kernel-sector D^2 is [0, inf)",
                ratio >= 1.7 && ratio <= 2.3, {{"ratio", ratio}, {"T", windows[i].T_max}});
  }
}

// ---------------------------------------------------------------------------------------------

void run_weyl(const ExperimentConfig& config, const WeylParams& p, ExperimentReport& report, std::size_t threads) {
  const auto profile = config.profile.build();
  const auto grid = RadialGrid::covering(config.grid.T_max, config.grid.h);

  struct Cell3 {
    double lambda, T, p;
    WeylQuotient q;
  };
  std::vector<Cell3> cells;
  for (double lambda : p.lambda) {
    for (double pp : p.p) {
      for (double T : p.T) cells.push_back({lambda, T, pp, {}});
    }
  }
  parallel_for(cells.size(), threads,
               [&](std::size_t i) { cells[i].q = weyl_quotient_p(cells[i].lambda, cells[i].T, cells[i].p, grid, profile); });

  auto& table = add_table(report, "weyl", {"lambda", "T", "p", "quotient", "paper_bound", "slope"});
  std::size_t violations = 0;
  std::size_t bounded = 0;
  double worst_ratio = 0.0;
  for (std::size_t start = 0; start < cells.size(); start += p.T.size()) {
    std::vector<double> Ts, qs;
    for (std::size_t i = start; i < start + p.T.size(); ++i) {
      Ts.push_back(cells[i].T);
      qs.push_back(cells[i].q.quotient);
    }
    const double slope = loglog_slope(Ts, qs);
    for (std::size_t i = start; i < start + p.T.size(); ++i) {
      const auto& c = cells[i];
      const double bound = c.q.reference_bound.value_or(kNaN);
      table.rows.push_back({c.lambda, c.T, c.p, c.q.quotient, bound, slope});
      if (c.q.reference_bound) {
        ++bounded;
        worst_ratio = std::max(worst_ratio, c.q.quotient / bound);
        if (!(c.q.quotient <= bound)) ++violations;
      }
      if (!c.q.notice.empty()) report.warnings.push_back(c.q.notice + " (T = " + fmt(c.T) + ")");
    }
    const auto& head = cells[start];
    add_verdict(report, "decay law lambda=" + fmt(head.lambda) + " p=" + fmt(head.p),
                "log-log slope of the quotient against T in [-1.3, -0.7]", "Weyl sequence psi_T = eta_T e^{-i lambda t} phi",
                slope >= -1.3 && slope <= -0.7, {{"lambda", head.lambda}, {"p", head.p}, {"slope", slope}});
  }
  if (bounded > 0) {
    add_verdict(report, "weyl bound", "||(D - lambda) psi_T||_1 / ||psi_T||_1 <= 7 f^{n-1}(4T) / (T f^{n-1}(2T))",
                "Weyl sequence psi_T = eta_T e^{-i lambda t} phi", violations == 0,
                {{"violations", static_cast<double>(violations)}, {"audited", static_cast<double>(bounded)},
                 {"max_quotient_over_bound", worst_ratio}});
  }

  if (!p.generalized_lambda.empty() && p.i_max >= p.i_min) {
    auto& gt = add_table(report, "generalized",
                         {"lambda", "i", "R", "quotient", "potential_sup", "inverse_radius", "laplace_ratio", "bound"});
    const int count = p.i_max - p.i_min + 1;
    for (double lambda : p.generalized_lambda) {
      std::vector<double> q(static_cast<std::size_t>(count));
      std::vector<WeylDecomposition> dec(static_cast<std::size_t>(count));
      std::vector<ChiParameters> chis(static_cast<std::size_t>(count));
      parallel_for(static_cast<std::size_t>(count), threads, [&](std::size_t k) {
        chis[k] = chi_schedule(p.i_min + static_cast<int>(k), p.x_factor, p.y_factor / 1.0);
        const auto eta = build_eta_i(lambda, chis[k], grid);
        q[k] = generalized_weyl_quotient(lambda, eta, profile);
        dec[k] = weyl_decomposition(lambda, chis[k], profile, grid);
      });
      bool monotone = true;
      std::size_t checked = 0;
      for (int k = 0; k < count; ++k) {
        const int i = p.i_min + k;
        const auto ku = static_cast<std::size_t>(k);
        gt.rows.push_back({lambda, static_cast<double>(i), chis[ku].R, q[ku], dec[ku].potential_sup,
                           dec[ku].inverse_radius, dec[ku].laplace_ratio, dec[ku].bound});
        if (i > 3 && k > 0) {
          ++checked;
          if (!(q[ku] < q[ku - 1])) monotone = false;
        }
      }
      add_verdict(report, "generalized criterion lambda=" + fmt(lambda),
                  "||psi_i||_inf ||(D^2 - lambda) psi_i||_1 / ||psi_i||_2^2 decreases for i >= 3",
                  "generalized Weyl criterion", monotone && checked > 0,
                  {{"lambda", lambda}, {"first", q.front()}, {"last", q.back()},
                   {"steps_checked", static_cast<double>(checked)}});
    }
  }

  if (!p.harmonic_R.empty()) {
    auto& ht = add_table(report, "harmonic", {"R", "certificate"});
    std::vector<double> certs;
    for (double R : p.harmonic_R) {
      const auto fam = asymptotically_harmonic_family(profile, R, grid);
      certs.push_back(fam.certificate);
      ht.rows.push_back({R, fam.certificate});
    }
    add_verdict(report, "asymptotically harmonic", "sup_{t >= R} |D^2 phi_R| -> 0 as R -> inf",
                "asymptotically D^2-harmonic spinors", certs.size() >= 2 && trends_to_zero(certs),
                {{"first", certs.front()}, {"last", certs.back()}});
  }

  if (!p.wang_R.empty()) {
    auto& wt = add_table(report, "wang", {"lambda", "R", "laplace_ratio", "gradient_ratio", "phase_gradient_ratio"});
    for (double lambda : p.wang_lambda) {
      const auto w = wang_scaling_check(lambda, p.wang_R, profile, grid);
      for (std::size_t i = 0; i < w.R.size(); ++i) {
        wt.rows.push_back({lambda, w.R[i], w.laplace_ratio[i], w.gradient_ratio[i], w.phase_gradient_ratio[i]});
      }
      add_verdict(report, "cut-off scaling lambda=" + fmt(lambda),
                  "||(Delta - lambda) eta_R||_1 <= (c/R) ||eta_R||_1 and ||grad |eta_R| ||_1 <= (c/R) ||eta_R||_1",
                  "cut-off estimates for asymptotically harmonic spinors", w.passed,
                  {{"lambda", lambda}, {"laplace_slope", w.laplace_slope}, {"gradient_slope", w.gradient_slope},
                   {"within_window", w.within_window ? 1.0 : 0.0}});
    }
  }
}

// ---------------------------------------------------------------------------------------------

void run_region(const ExperimentConfig& config, const RegionParams& p, ExperimentReport& report,
                std::size_t threads) {
  const auto profile = config.profile.build();
  const auto grid = RadialGrid::covering(config.grid.T_max, config.grid.h);
  std::vector<Complex> zs;
  for (double re : p.z_re) {
    for (double im : p.z_im) zs.emplace_back(re, im);
  }
  RegionMapOptions options;
  options.slope_threshold = p.slope_threshold;
  options.sign = p.sign;
  std::vector<RegionCell> cells(zs.size());
  std::vector<double> symmetry(zs.size());
  parallel_for(zs.size(), threads, [&](std::size_t i) {
    std::vector<double> q;
    for (double T : p.T) q.push_back(conjugated_quotient(zs[i], T, p.p, grid, profile, p.sign));
    cells[i] = classify_region_cell(zs[i], std::move(q), p.T, options);
    const double mirrored = conjugated_quotient(-zs[i], p.T.front(), p.p, grid, profile, -p.sign);
    symmetry[i] = std::abs(mirrored - cells[i].quotients.front()) / cells[i].quotients.front();
  });
  auto& rt = add_table(report, "region", {"z_re", "z_im", "T", "quotient"});
  auto& ct = add_table(report, "classification", {"z_re", "z_im", "slope", "monotone_tail", "classification"});
  double worst_symmetry = 0.0;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const auto& c = cells[i];
    for (std::size_t k = 0; k < p.T.size(); ++k) rt.rows.push_back({c.z.real(), c.z.imag(), p.T[k], c.quotients[k]});
    ct.rows.push_back({c.z.real(), c.z.imag(), c.slope, c.monotone_tail ? 1.0 : 0.0,
                       std::string(to_string(c.classification))});
    worst_symmetry = std::max(worst_symmetry, symmetry[i]);
  }
  add_verdict(report, "sector-sign symmetry", "Q_p(z, +1) = Q_p(-z, -1) to 1e-12 relative",
              "spectrum symmetric under lambda -> -lambda", worst_symmetry <= 1e-12,
              {{"max_relative_difference", worst_symmetry}});
}

// ---------------------------------------------------------------------------------------------

struct FitTables {
  Table& fits;
  Table& samples;
  Table& sampling;
};

void add_fit(ExperimentReport& report, FitTables tables, const KernelBoundFit& fit, std::string name,
             std::string inequality, std::string anchor) {
  auto& [fits, samples, sampling] = tables;
  for (const auto& [key, value] : fit.constants) fits.rows.push_back({fit.form, key, value});
  for (const auto& s : fit.samples) {
    samples.rows.push_back({fit.form, s.tau, s.x, s.y, s.distance, s.log_abs});
  }
  Values values = fit.constants;
  values.emplace_back("max_log_violation", fit.max_log_violation);
  values.emplace_back("samples", static_cast<double>(fit.samples.size()));
  add_verdict(report, std::move(name), std::move(inequality), std::move(anchor), fit.passed, std::move(values));
  sampling.rows.push_back({fit.form, name, static_cast<double>(fit.samples.size()), fit.sample_description});
}

void run_heat(const ExperimentConfig& config, const HeatParams& p, ExperimentReport& report) {
  const auto profile = config.profile.build();
  const auto grid = RadialGrid::covering(config.grid.T_max, config.grid.h);
  const auto op = assemble_operator(profile, grid, OperatorKind::DiracSquared);

  std::vector<double> positive_tau;
  for (double t : p.tau) {
    if (t > 0.0) positive_tau.push_back(t);
  }
  if (!positive_tau.empty()) {
    const auto dom = domination_check(profile, grid, positive_tau);
    auto& dt = add_table(report, "domination", {"tau", "K1", "max_violation", "scale"});
    for (const auto& e : dom.entries) dt.rows.push_back({e.tau, dom.K1, e.max_violation, e.scale});
    add_verdict(report, "semigroup domination", "|H_{D^2}(x, y, tau)| <= e^{K1 tau} h_Delta(x, y, tau) + 1e-8 scale",
                "domination of e^{-tau D^2} by e^{-tau (Delta - K1)}", dom.passed,
                {{"K1", dom.K1}, {"max_relative_violation", dom.max_relative_violation}});
  }

  const SpectralCalculus calculus(op);
  for (const auto& w : calculus.warnings()) report.warnings.push_back(w);
  if (!p.tau.empty()) {
    auto& pt = add_table(report, "pnorm", {"p", "tau", "norm", "scaled"});
    for (double pp : {1.0, std::numeric_limits<double>::infinity()}) {
      const auto r = pnorm_growth_check(op, calculus, p.tau, pp);
      for (const auto& e : r.entries) pt.rows.push_back({pp, e.tau, e.norm, e.scaled});
      add_verdict(report, std::string("p-norm growth p=") + (std::isinf(pp) ? "inf" : "1"),
                  "||e^{-tau D^2}||_{p->p} <= e^{K1 tau} (1 + 1e-8)", "L^p growth of the semigroup", r.passed,
                  {{"p", pp}, {"K1", r.K1}, {"max_scaled", r.max_scaled}});
    }
  }

  auto& fits = add_table(report, "fits", {"form", "constant", "value"});
  auto& samples = add_table(report, "fit_samples", {"form", "tau", "x", "y", "distance", "log_abs"});
  auto& sampling_table = add_table(report, "fit_sampling", {"form", "verdict", "count", "description"});
  const FitTables tables{fits, samples, sampling_table};
  KernelSampleOptions sampling;
  sampling.rows = static_cast<std::size_t>(p.sample_rows);
  sampling.column_step = p.column_step;
  sampling.noise_floor = p.noise_floor;

  GaussianFitOptions gopt;
  gopt.sampling = sampling;
  add_fit(report, tables, gaussian_bound_fit(profile, op, calculus, p.fit_tau, p.delta, gopt), "heatg fit",
          "|H| <= C3 V(x, sqrt tau)^{-1/2} V(y, sqrt tau)^{-1/2} exp(-d^2/(C4 tau) + C5 sqrt(K0 tau) + K1 tau)",
          "Gaussian upper bound for the heat kernel");
  MuFormOptions mopt;
  mopt.sampling = sampling;
  for (double beta : p.beta) {
    add_fit(report, tables, mu_form_bound_fit(profile, op, calculus, beta, p.fit_tau, mopt),
            "heat42 fit beta=" + fmt(beta),
            "|H| <= C mu(x)^2 max(tau^{-n/2}, 1) e^{-beta d} e^{-(alpha + 1) tau}, alpha < 0",
            "mu-weighted heat kernel bound");
  }
  ResolventOptions ropt;
  ropt.sampling = sampling;
  const auto res = resolvent_power_kernel(op, calculus, profile, Complex(p.xi_re, p.xi_im), p.m, ropt);
  add_fit(report, tables, res.fit, "res1 fit m=" + std::to_string(p.m),
          "|G_xi(x, y)| <= C mu(x) mu(y) e^{-eps d(x, y)}, eps > 0", "resolvent kernel decay");

  const auto lap = resolvent_laplace_check(op, p.laplace_alpha, p.laplace_m, p.laplace_tau_max);
  auto& lt = add_table(report, "laplace", {"alpha", "m", "relative_error", "tau_max_required"});
  lt.rows.push_back({p.laplace_alpha, static_cast<double>(p.laplace_m), lap.relative_error, lap.tau_max_required});
  add_verdict(report, "laplace identity",
              "(D^2 - alpha)^{-m/2} = Gamma(m/2)^{-1} int_0^inf e^{-t D^2} t^{m/2-1} e^{alpha t} dt to 1e-6",
              "resolvent powers as Laplace transforms of the semigroup", lap.relative_error <= 1e-6,
              {{"alpha", p.laplace_alpha}, {"m", static_cast<double>(p.laplace_m)},
               {"relative_error", lap.relative_error}});
}

std::string failure_kind(const Error& e) {
  if (dynamic_cast<const AccuracyError*>(&e)) return "accuracy";
  if (dynamic_cast<const PreconditionError*>(&e)) return "precondition";
  if (dynamic_cast<const DomainError*>(&e)) return "domain";
  return "numeric";
}

}  // namespace

ExperimentReport run_experiment(const ExperimentConfig& config, const RunOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  ExperimentReport report;
  report.tool_version = tool_version();
  report.experiment = to_string(config.experiment);
  report.config_echo = config_to_json(config);
  const std::size_t threads = std::max<std::size_t>(1, options.threads);
  report.tables.reserve(kMaxTables);
  try {
    std::visit(
        [&](const auto& p) {
          using P = std::decay_t<decltype(p)>;
          if constexpr (std::is_same_v<P, GrowthParams>) {
            run_growth(config, p, report);
          } else if constexpr (std::is_same_v<P, SpectrumParams>) {
            run_spectrum(config, p, report, threads);
          } else if constexpr (std::is_same_v<P, WeylParams>) {
            run_weyl(config, p, report, threads);
          } else if constexpr (std::is_same_v<P, RegionParams>) {
            run_region(config, p, report, threads);
          } else {
            run_heat(config, p, report);
          }
        },
        config.params);
  } catch (const ConfigError&) {
    throw;
  } catch (const IoError&) {
    throw;
  } catch (const Error& e) {
    report.failure = Failure{failure_kind(e), e.what()};
  }
  report.run_info.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report.run_info.timestamp = timestamp_now();
  return report;
}

}  // namespace speclab
