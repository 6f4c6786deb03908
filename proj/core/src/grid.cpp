#include "speclab/grid.hpp"

#include <cmath>

#include "speclab/errors.hpp"

namespace speclab {

RadialGrid::RadialGrid(double h, std::size_t m) : h_(h), m_(m) {
  if (!(h > 0.0) || !std::isfinite(h)) throw DomainError("RadialGrid: spacing must be finite and > 0");
  if (m < 3) throw DomainError("RadialGrid: need at least 3 interior nodes");
}

RadialGrid RadialGrid::covering(double t_max, double h) {
  if (!(t_max > 0.0) || !(h > 0.0)) throw DomainError("RadialGrid: extent and spacing must be > 0");
  const double cells = std::ceil(t_max / h - 1e-9);
  if (cells < 4.0) throw DomainError("RadialGrid: extent too small for the spacing");
  const auto m = static_cast<std::size_t>(cells) - 1;
  return RadialGrid(t_max / cells, m);
}

std::vector<double> RadialGrid::nodes() const {
  std::vector<double> t(m_);
  for (std::size_t j = 0; j < m_; ++j) t[j] = node(j);
  return t;
}

RadialSection::RadialSection(RadialGrid g, std::vector<Complex> v) : grid(g), values(std::move(v)) {
  if (values.size() != grid.size()) throw DomainError("RadialSection: length differs from grid size");
}

RadialSection::RadialSection(RadialGrid g) : grid(g), values(g.size()) {}

}  // namespace speclab
