#include "speclab/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace speclab {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

double log_add_exp(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  const double hi = std::max(a, b);
  const double lo = std::min(a, b);
  return hi + std::log1p(std::exp(lo - hi));
}

double log_sub_exp(double a, double b) {
  if (b == kNegInf) return a;
  if (b > a) throw std::invalid_argument("log_sub_exp: b exceeds a");
  if (a == b) return kNegInf;
  return a + std::log(-std::expm1(b - a));
}

double log_sum_exp(std::span<const double> log_terms, std::span<const double> weights) {
  if (!weights.empty() && weights.size() != log_terms.size()) {
    throw std::invalid_argument("log_sum_exp: weight count mismatch");
  }
  double peak = kNegInf;
  for (std::size_t i = 0; i < log_terms.size(); ++i) {
    if (!weights.empty() && weights[i] == 0.0) continue;
    peak = std::max(peak, log_terms[i]);
  }
  if (peak == kNegInf) return kNegInf;
  if (!std::isfinite(peak)) return peak;
  double acc = 0.0;
  for (std::size_t i = 0; i < log_terms.size(); ++i) {
    const double w = weights.empty() ? 1.0 : weights[i];
    if (w == 0.0) continue;
    acc += w * std::exp(log_terms[i] - peak);
  }
  return peak + std::log(acc);
}

double simpson(std::span<const double> values, double step) {
  const std::size_t n = values.size();
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("simpson: need an odd number (>=3) of samples");
  double acc = values.front() + values.back();
  for (std::size_t i = 1; i + 1 < n; ++i) acc += (i % 2 == 1 ? 4.0 : 2.0) * values[i];
  return acc * step / 3.0;
}

double log_simpson(std::span<const double> log_values, double step) {
  const std::size_t n = log_values.size();
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("log_simpson: need an odd number (>=3) of samples");
  std::vector<double> weights(n);
  for (std::size_t i = 0; i < n; ++i) {
    weights[i] = (i == 0 || i + 1 == n) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
  }
  return log_sum_exp(log_values, weights) + std::log(step / 3.0);
}

LineFit fit_line(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2) throw std::invalid_argument("fit_line: need >= 2 paired samples");
  const double n = static_cast<double>(xs.size());
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("fit_line: degenerate abscissae");
  const double slope = sxy / sxx;
  return {slope, my - slope * mx};
}

double loglog_slope(std::span<const double> xs, std::span<const double> ys) {
  std::vector<double> lx(xs.size());
  std::vector<double> ly(ys.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!(xs[i] > 0.0) || !(ys[i] > 0.0)) return std::numeric_limits<double>::quiet_NaN();
    lx[i] = std::log(xs[i]);
    ly[i] = std::log(ys[i]);
  }
  return fit_line(lx, ly).slope;
}

LineFit fit_upper_line(std::span<const double> xs, std::span<const double> ys, double slope_min,
                       double slope_max) {
  if (xs.size() != ys.size() || xs.empty()) throw std::invalid_argument("fit_upper_line: empty sample");
  if (!(slope_min <= slope_max)) throw std::invalid_argument("fit_upper_line: empty slope range");
  const double mean_x = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
  const auto intercept_for = [&](double s) {
    double c = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < xs.size(); ++i) c = std::max(c, ys[i] - s * xs[i]);
    return c;
  };
  // Mean gap is c(s) + s * mean_x - mean_y: convex and piecewise linear in s.
  const auto objective = [&](double s) { return intercept_for(s) + s * mean_x; };
  double lo = slope_min;
  double hi = slope_max;
  for (int iter = 0; iter < 200 && hi - lo > 1e-14 * std::max(1.0, std::abs(lo) + std::abs(hi)); ++iter) {
    const double m1 = lo + (hi - lo) / 3.0;
    const double m2 = hi - (hi - lo) / 3.0;
    if (objective(m1) <= objective(m2)) {
      hi = m2;
    } else {
      lo = m1;
    }
  }
  const double s = 0.5 * (lo + hi);
  return {s, intercept_for(s)};
}

bool strictly_decreasing(std::span<const double> values) {
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (!(values[i] < values[i - 1])) return false;
  }
  return true;
}

bool trends_to_zero(std::span<const double> values) {
  if (values.size() < 2) return false;
  const std::size_t tail = std::max<std::size_t>(2, values.size() / 4);
  const auto last = values.subspan(values.size() - tail);
  for (std::size_t i = 1; i < last.size(); ++i) {
    if (last[i] > last[i - 1]) return false;
  }
  return values.back() < 0.1 * values.front();
}

}  // namespace speclab
