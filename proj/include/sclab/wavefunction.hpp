#pragma once

#include <complex>
#include <string>
#include <vector>

#include "sclab/fft.hpp"
#include "sclab/grid.hpp"

namespace sclab {

// Sampled state with its quadrature geometry and action unit attached.
// Immutable after construction; operations return new values.
class WaveFunction {
 public:
  WaveFunction(Grid grid, std::vector<cplx> values, double hbar);

  const Grid& grid() const { return grid_; }
  const std::vector<cplx>& values() const { return v_; }
  double hbar() const { return hbar_; }

  double norm() const;
  bool is_normalized() const;
  WaveFunction normalized() const;

 private:
  Grid grid_;
  std::vector<cplx> v_;
  double hbar_;
};

cplx inner_product(const WaveFunction& f, const WaveFunction& g);

// Coefficients c_n, n = -N/2 .. N/2-1, of f(x) = sum_n c_n e^{i k_n (x - x_min)}
// with k_n = 2*pi*n/L; on the circle this is the plain e^{inx} expansion.
std::vector<cplx> fourier_side(const WaveFunction& f);
WaveFunction from_fourier_side(const Grid& grid, const std::vector<cplx>& coeffs,
                               double hbar);

void write_csv(const WaveFunction& f, const std::string& path);
WaveFunction read_csv(const std::string& path);

}  // namespace sclab
