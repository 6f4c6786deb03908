#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace speclab {

using Complex = std::complex<double>;

/// Uniform interior nodes t_j = j h, j = 1..m, on [0, T_max] with T_max = (m+1) h.
class RadialGrid {
 public:
  RadialGrid(double h, std::size_t m);

  /// Grid on [0, t_max] whose spacing is the largest h' <= h with t_max = (m+1) h'.
  static RadialGrid covering(double t_max, double h);

  double h() const { return h_; }
  std::size_t size() const { return m_; }
  double t_max() const { return h_ * static_cast<double>(m_ + 1); }
  /// Zero-based index: node(0) == h.
  double node(std::size_t j) const { return h_ * static_cast<double>(j + 1); }
  std::vector<double> nodes() const;

  bool operator==(const RadialGrid&) const = default;

 private:
  double h_;
  std::size_t m_;
};

/// Radial coefficient u of a kernel-sector spinor u(t) phi, sampled on the interior nodes.
struct RadialSection {
  RadialSection(RadialGrid grid, std::vector<Complex> values);
  explicit RadialSection(RadialGrid grid);

  RadialGrid grid;
  std::vector<Complex> values;
};

}  // namespace speclab
