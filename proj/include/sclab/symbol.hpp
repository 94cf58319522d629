#pragma once

#include <complex>
#include <vector>

#include "sclab/fft.hpp"
#include "sclab/grid.hpp"

namespace sclab {

// Envelope profile a(u) in the unit-scale variable, sampled on a line grid.
// Must decay rapidly: the outer 5% of samples stay below 1e-8 of the peak,
// a discrete stand-in for Schwartz class.  Values off the sample points come
// from 6-point Lagrange interpolation; outside the grid a(u) = 0.
class SymbolFunction {
 public:
  SymbolFunction(Grid unit_grid, std::vector<cplx> values);

  static SymbolFunction gaussian(std::size_t n = 2048, double half_width = 12.0);

  const Grid& grid() const { return grid_; }
  const std::vector<cplx>& values() const { return v_; }
  double norm() const { return norm_; }
  bool is_gaussian() const { return gaussian_; }

  cplx operator()(double u) const;

 private:
  Grid grid_;
  std::vector<cplx> v_;
  double norm_;
  bool gaussian_ = false;
};

}  // namespace sclab
