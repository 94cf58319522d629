#include "sclab/grid.hpp"

#include <numbers>

#include "sclab/errors.hpp"
#include "sclab/fft.hpp"

namespace sclab {

Grid Grid::line(double x_min, double x_max, std::size_t n) {
  if (n < 2) throw GridMismatch("grid needs at least two samples");
  if (!(x_min < x_max)) throw GridMismatch("empty line segment");
  if (!Fft::is_pow2(n))
    throw GridMismatch("line grids need a power-of-two sample count");
  return Grid(GridKind::LineSegment, x_min, x_max, n);
}

Grid Grid::circle(std::size_t n) {
  if (n < 2) throw GridMismatch("grid needs at least two samples");
  if (!Fft::is_pow2(n))
    throw GridMismatch("circle grids need a power-of-two sample count");
  return Grid(GridKind::Circle, 0.0, 2.0 * std::numbers::pi, n);
}

Grid Grid::torus(std::size_t n) {
  if (n < 2) throw GridMismatch("grid needs at least two samples");
  return Grid(GridKind::TorusLattice, 0.0, 2.0 * std::numbers::pi, n);
}

}  // namespace sclab
