#include "sclab/symbol.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sclab/errors.hpp"

namespace sclab {

SymbolFunction::SymbolFunction(Grid unit_grid, std::vector<cplx> values)
    : grid_(unit_grid), v_(std::move(values)) {
  if (grid_.kind() != GridKind::LineSegment)
    throw UnsupportedSymbolForm("symbols live on line grids");
  if (v_.size() != grid_.size())
    throw GridMismatch("symbol sample count does not match grid");

  double peak = 0.0;
  for (const auto& z : v_) peak = std::max(peak, std::abs(z));
  std::size_t tail = std::max<std::size_t>(1, grid_.size() / 20);
  for (std::size_t j = 0; j < tail; ++j) {
    if (std::abs(v_[j]) > 1e-8 * peak ||
        std::abs(v_[grid_.size() - 1 - j]) > 1e-8 * peak)
      throw UnsupportedSymbolForm("symbol tails decay too slowly");
  }

  double s = 0.0;
  for (const auto& z : v_) s += std::norm(z);
  norm_ = std::sqrt(s * grid_.dx());
}

SymbolFunction SymbolFunction::gaussian(std::size_t n, double half_width) {
  Grid g = Grid::line(-half_width, half_width, n);
  std::vector<cplx> v(n);
  double amp = std::pow(std::numbers::pi, -0.25);
  for (std::size_t j = 0; j < n; ++j) {
    double u = g.x(j);
    v[j] = amp * std::exp(-0.5 * u * u);
  }
  SymbolFunction s(g, std::move(v));
  s.gaussian_ = true;
  return s;
}

cplx SymbolFunction::operator()(double u) const {
  double t = (u - grid_.x_min()) / grid_.dx();
  if (t < 0.0 || t > static_cast<double>(grid_.size() - 1)) return {0.0, 0.0};

  // 6-point Lagrange stencil clamped to the grid
  std::ptrdiff_t n = static_cast<std::ptrdiff_t>(grid_.size());
  std::ptrdiff_t base = static_cast<std::ptrdiff_t>(std::floor(t)) - 2;
  base = std::clamp<std::ptrdiff_t>(base, 0, n - 6);
  cplx acc{0.0, 0.0};
  for (std::ptrdiff_t i = base; i < base + 6; ++i) {
    double w = 1.0;
    for (std::ptrdiff_t k = base; k < base + 6; ++k) {
      if (k == i) continue;
      w *= (t - static_cast<double>(k)) / static_cast<double>(i - k);
    }
    acc += w * v_[static_cast<std::size_t>(i)];
  }
  return acc;
}

}  // namespace sclab
