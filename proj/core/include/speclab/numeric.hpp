#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace speclab {

/// log(e^a + e^b) without overflow; -inf is the additive identity.
double log_add_exp(double a, double b);

/// log(sum_i w_i e^{l_i}) for nonnegative weights.
double log_sum_exp(std::span<const double> log_terms, std::span<const double> weights = {});

/// log(e^a - e^b) for a >= b. Returns -inf when a == b.
double log_sub_exp(double a, double b);

/// Composite Simpson rule over equally spaced samples; `values.size()` must be odd and >= 3.
double simpson(std::span<const double> values, double step);

/// Composite Simpson rule on log-magnitudes; returns log of the integral.
double log_simpson(std::span<const double> log_values, double step);

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
};

/// Ordinary least squares y = slope * x + intercept.
LineFit fit_line(std::span<const double> xs, std::span<const double> ys);

/// Least-squares slope of log(y) against log(x). Nonpositive y gives NaN.
double loglog_slope(std::span<const double> xs, std::span<const double> ys);

/// Upper supporting line y <= intercept + slope * x for every sample, with slope restricted to
/// [slope_min, slope_max], chosen to minimise the summed gap between the line and the samples.
LineFit fit_upper_line(std::span<const double> xs, std::span<const double> ys, double slope_min,
                       double slope_max);

/// Strictly decreasing (each value below its predecessor).
bool strictly_decreasing(std::span<const double> values);

/// Finite-audit decision rule for "tends to zero": the last quarter of the samples (at least two)
/// is monotone decreasing and the final value is below 0.1 times the first value.
bool trends_to_zero(std::span<const double> values);

}  // namespace speclab
