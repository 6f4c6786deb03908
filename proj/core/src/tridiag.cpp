#include "speclab/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>

#include "speclab/errors.hpp"

namespace speclab {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct SturmData {
  std::span<const double> diag;
  std::vector<double> off2;
  double pivmin = 0.0;

  SturmData(std::span<const double> d, std::span<const double> e) : diag(d), off2(e.size()) {
    double max_e2 = 1.0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      off2[i] = e[i] * e[i];
      max_e2 = std::max(max_e2, off2[i]);
    }
    pivmin = std::numeric_limits<double>::min() * max_e2;
  }

  std::size_t count(double x) const {
    std::size_t negatives = 0;
    double q = diag[0] - x;
    if (std::abs(q) < pivmin) q = -pivmin;
    if (q < 0.0) ++negatives;
    for (std::size_t i = 1; i < diag.size(); ++i) {
      q = diag[i] - x - off2[i - 1] / q;
      if (std::abs(q) < pivmin) q = -pivmin;
      if (q < 0.0) ++negatives;
    }
    return negatives;
  }
};

void check_shapes(std::span<const double> diag, std::span<const double> offdiag) {
  if (diag.empty()) throw DomainError("tridiagonal matrix must be nonempty");
  if (offdiag.size() + 1 != diag.size()) throw DomainError("tridiagonal off-diagonal length must be n-1");
}

/// LU factorisation with partial pivoting of T - shift I.
class ShiftedLU {
 public:
  ShiftedLU(std::span<const double> diag, std::span<const double> offdiag, double shift, double pert)
      : n_(diag.size()), d_(n_), dl_(offdiag.begin(), offdiag.end()), du_(offdiag.begin(), offdiag.end()),
        du2_(n_ > 2 ? n_ - 2 : 0, 0.0), pivot_(n_ > 1 ? n_ - 1 : 0, false), pert_(pert) {
    for (std::size_t i = 0; i < n_; ++i) d_[i] = diag[i] - shift;
    for (std::size_t i = 0; i + 1 < n_; ++i) {
      if (std::abs(d_[i]) >= std::abs(dl_[i])) {
        if (d_[i] == 0.0) d_[i] = pert_;
        const double fact = dl_[i] / d_[i];
        dl_[i] = fact;
        d_[i + 1] -= fact * du_[i];
      } else {
        const double fact = d_[i] / dl_[i];
        d_[i] = dl_[i];
        dl_[i] = fact;
        const double temp = du_[i];
        du_[i] = d_[i + 1];
        d_[i + 1] = temp - fact * d_[i + 1];
        if (i + 2 < n_) {
          du2_[i] = du_[i + 1];
          du_[i + 1] = -fact * du_[i + 1];
        }
        pivot_[i] = true;
      }
    }
    for (double& v : d_) {
      if (std::abs(v) < pert_) v = std::copysign(pert_, v == 0.0 ? 1.0 : v);
    }
  }

  void solve(std::vector<double>& b) const {
    for (std::size_t i = 0; i + 1 < n_; ++i) {
      if (!pivot_[i]) {
        b[i + 1] -= dl_[i] * b[i];
      } else {
        const double temp = b[i] - dl_[i] * b[i + 1];
        b[i] = b[i + 1];
        b[i + 1] = temp;
      }
    }
    const std::size_t n = n_;
    b[n - 1] /= d_[n - 1];
    if (n >= 2) b[n - 2] = (b[n - 2] - du_[n - 2] * b[n - 1]) / d_[n - 2];
    for (std::size_t k = n >= 2 ? n - 2 : 0; k-- > 0;) {
      b[k] = (b[k] - du_[k] * b[k + 1] - du2_[k] * b[k + 2]) / d_[k];
    }
  }

 private:
  std::size_t n_;
  std::vector<double> d_, dl_, du_, du2_;
  std::vector<bool> pivot_;
  double pert_;
};

double residual_norm(std::span<const double> diag, std::span<const double> offdiag, const Eigen::VectorXd& v,
                     double lambda) {
  const std::size_t n = diag.size();
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double r = (diag[i] - lambda) * v[static_cast<Eigen::Index>(i)];
    if (i > 0) r += offdiag[i - 1] * v[static_cast<Eigen::Index>(i - 1)];
    if (i + 1 < n) r += offdiag[i] * v[static_cast<Eigen::Index>(i + 1)];
    acc += r * r;
  }
  return std::sqrt(acc);
}

void normalize(std::vector<double>& x) {
  double peak = 0.0;
  for (double v : x) peak = std::max(peak, std::abs(v));
  if (peak == 0.0 || !std::isfinite(peak)) return;
  double acc = 0.0;
  for (double& v : x) {
    v /= peak;
    acc += v * v;
  }
  const double norm = std::sqrt(acc);
  for (double& v : x) v /= norm;
}

}  // namespace

std::size_t sturm_count(std::span<const double> diag, std::span<const double> offdiag, double x) {
  check_shapes(diag, offdiag);
  return SturmData(diag, offdiag).count(x);
}

std::pair<double, double> gershgorin_interval(std::span<const double> diag, std::span<const double> offdiag) {
  check_shapes(diag, offdiag);
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  const std::size_t n = diag.size();
  for (std::size_t i = 0; i < n; ++i) {
    double radius = 0.0;
    if (i > 0) radius += std::abs(offdiag[i - 1]);
    if (i + 1 < n) radius += std::abs(offdiag[i]);
    lo = std::min(lo, diag[i] - radius);
    hi = std::max(hi, diag[i] + radius);
  }
  // Widen by a rounding margin so that the enclosure is safe for the Sturm counts.
  const double margin = 2.0 * kEps * static_cast<double>(n) * std::max(std::abs(lo), std::abs(hi)) +
                        std::numeric_limits<double>::min();
  return {lo - margin, hi + margin};
}

double tridiag_norm_inf(std::span<const double> diag, std::span<const double> offdiag) {
  check_shapes(diag, offdiag);
  double norm = 0.0;
  const std::size_t n = diag.size();
  for (std::size_t i = 0; i < n; ++i) {
    double row = std::abs(diag[i]);
    if (i > 0) row += std::abs(offdiag[i - 1]);
    if (i + 1 < n) row += std::abs(offdiag[i]);
    norm = std::max(norm, row);
  }
  return norm;
}

double default_eig_tolerance(std::span<const double> diag, std::span<const double> offdiag) {
  return 1e-9 * std::max(1.0, tridiag_norm_inf(diag, offdiag));
}

TridiagEigen eig_sym_tridiag(std::span<const double> diag, std::span<const double> offdiag, double lo, double hi,
                             double tol, bool want_vectors) {
  check_shapes(diag, offdiag);
  if (!(tol >= 0.0)) throw DomainError("eig_sym_tridiag: tolerance must be >= 0");
  if (!(lo <= hi)) throw DomainError("eig_sym_tridiag: empty interval");
  const std::size_t n = diag.size();
  const SturmData sturm(diag, offdiag);
  const auto [gl, gu] = gershgorin_interval(diag, offdiag);
  const double norm = std::max(tridiag_norm_inf(diag, offdiag), std::numeric_limits<double>::min());

  const double window_lo = std::max(lo, gl);
  const double window_hi = std::min(hi, gu);
  TridiagEigen result;
  if (window_lo > window_hi) return result;
  // Eigenvalue indices k with window_lo <= lambda_k <= window_hi.
  const std::size_t first = sturm.count(window_lo);
  const std::size_t last = hi >= gu ? n : sturm.count(std::nextafter(window_hi, std::numeric_limits<double>::infinity()));
  if (last <= first) return result;

  const std::size_t count = last - first;
  std::vector<double> lower(count, window_lo);
  std::vector<double> upper(count, std::nextafter(window_hi, std::numeric_limits<double>::infinity()));
  result.values.resize(count);
  for (std::size_t k = 0; k < count; ++k) {
    double a = lower[k];
    double b = upper[k];
    if (k > 0) a = std::max(a, lower[k - 1]);
    for (;;) {
      const double width = b - a;
      const double floor = std::max(tol, 2.0 * kEps * std::max(std::abs(a), std::abs(b)));
      if (width <= floor) break;
      const double mid = a + 0.5 * width;
      if (mid <= a || mid >= b) break;
      const std::size_t c = sturm.count(mid);
      if (c > first + k) {
        b = mid;
        const std::size_t stop = std::min(c - first, count);
        for (std::size_t j = k + 1; j < stop; ++j) upper[j] = std::min(upper[j], mid);
      } else {
        a = mid;
      }
    }
    lower[k] = a;
    result.values[k] = a + 0.5 * (b - a);
  }

  if (!want_vectors) return result;

  const double resolution = std::max(tol, 64.0 * kEps * norm);
  const double residual_bound = 10.0 * resolution;
  const double ortho_gap = 1e-6 * norm;
  const double pert = kEps * norm;
  result.vectors.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(count));

  std::uint64_t state = 0x9E3779B97F4A7C15ULL;
  const auto next_uniform = [&state]() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return static_cast<double>(state >> 11) * 0x1.0p-53 * 2.0 - 1.0;
  };

  std::size_t cluster_start = 0;
  std::vector<std::pair<std::size_t, std::size_t>> tight_clusters;
  std::size_t tight_start = 0;
  std::vector<double> x(n);
  for (std::size_t k = 0; k < count; ++k) {
    if (k > 0 && result.values[k] - result.values[k - 1] > ortho_gap) cluster_start = k;
    if (k > 0 && result.values[k] - result.values[k - 1] > tol) {
      if (k - tight_start > 1) tight_clusters.emplace_back(tight_start, k);
      tight_start = k;
    }
    double shift = result.values[k];
    if (k > cluster_start) {
      const double prev = result.values[k - 1];
      const double sep = 10.0 * kEps * std::max(1.0, std::abs(shift));
      if (shift - prev < sep) shift = prev + sep;
    }
    const ShiftedLU lu(diag, offdiag, shift, pert);
    for (std::size_t i = 0; i < n; ++i) x[i] = next_uniform();
    Eigen::VectorXd v(static_cast<Eigen::Index>(n));
    double resid = std::numeric_limits<double>::infinity();
    for (int iter = 0; iter < 5; ++iter) {
      lu.solve(x);
      for (std::size_t j = cluster_start; j < k; ++j) {
        const auto col = result.vectors.col(static_cast<Eigen::Index>(j));
        double dot = 0.0;
        for (std::size_t i = 0; i < n; ++i) dot += col[static_cast<Eigen::Index>(i)] * x[i];
        for (std::size_t i = 0; i < n; ++i) x[i] -= dot * col[static_cast<Eigen::Index>(i)];
      }
      normalize(x);
      for (std::size_t i = 0; i < n; ++i) v[static_cast<Eigen::Index>(i)] = x[i];
      resid = residual_norm(diag, offdiag, v, result.values[k]);
      if (iter >= 1 && resid <= residual_bound) break;
    }
    if (resid > residual_bound) {
      std::ostringstream msg;
      msg << "inverse iteration for eigenvalue " << result.values[k] << " stalled at residual " << resid;
      result.warnings.push_back(msg.str());
    }
    result.vectors.col(static_cast<Eigen::Index>(k)) = v;
  }
  if (count - tight_start > 1) tight_clusters.emplace_back(tight_start, count);

  // Rayleigh-Ritz inside clusters tighter than the bisection tolerance.
  for (const auto& [begin, end] : tight_clusters) {
    const auto width = static_cast<Eigen::Index>(end - begin);
    Eigen::MatrixXd basis = result.vectors.middleCols(static_cast<Eigen::Index>(begin), width);
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(basis);
    basis = qr.householderQ() * Eigen::MatrixXd::Identity(basis.rows(), width);
    Eigen::MatrixXd tb(basis.rows(), width);
    for (Eigen::Index c = 0; c < width; ++c) {
      for (std::size_t i = 0; i < n; ++i) {
        double acc = diag[i] * basis(static_cast<Eigen::Index>(i), c);
        if (i > 0) acc += offdiag[i - 1] * basis(static_cast<Eigen::Index>(i - 1), c);
        if (i + 1 < n) acc += offdiag[i] * basis(static_cast<Eigen::Index>(i + 1), c);
        tb(static_cast<Eigen::Index>(i), c) = acc;
      }
    }
    const Eigen::MatrixXd projected = basis.transpose() * tb;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> small(0.5 * (projected + projected.transpose()));
    result.vectors.middleCols(static_cast<Eigen::Index>(begin), width) = basis * small.eigenvectors();
    for (Eigen::Index c = 0; c < width; ++c) {
      result.values[begin + static_cast<std::size_t>(c)] = small.eigenvalues()[c];
    }
    std::ostringstream msg;
    msg << "cluster of " << width << " eigenvalues near " << result.values[begin]
        << " tighter than tolerance; Ritz vectors used";
    result.warnings.push_back(msg.str());
  }

  for (std::size_t k = 0; k < count; ++k) {
    result.max_residual = std::max(result.max_residual,
                                   residual_norm(diag, offdiag, result.vectors.col(static_cast<Eigen::Index>(k)),
                                                 result.values[k]));
  }
  return result;
}

TridiagEigen eig_sym_tridiag_all(std::span<const double> diag, std::span<const double> offdiag, double tol,
                                 bool want_vectors) {
  const auto [gl, gu] = gershgorin_interval(diag, offdiag);
  return eig_sym_tridiag(diag, offdiag, gl, gu, tol, want_vectors);
}

}  // namespace speclab
