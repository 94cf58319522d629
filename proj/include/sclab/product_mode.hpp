#pragma once

#include <cstddef>
#include <vector>

#include "sclab/fft.hpp"
#include "sclab/wavefunction.hpp"

namespace sclab {

// Coefficients on the product basis e^{inx} x H_j(y/sqrt(hbar)):
// c[idx(ni, j)] with ni = 0..fourier_modes-1 mapping to n = ni - N/2,
// j = 0..hermite_levels-1.
struct ProductModeState {
  std::size_t fourier_modes = 0;
  std::size_t hermite_levels = 0;
  std::vector<cplx> c;
  double hbar = 0.0;

  std::size_t idx(std::size_t ni, std::size_t j) const {
    return ni * hermite_levels + j;
  }
  double mode(std::size_t ni) const {
    return static_cast<double>(ni) - static_cast<double>(fourier_modes / 2);
  }
};

// Separable Hamiltonian a*tau*h1 + b*tau^2 + c*tau^3 + d*tau^4 acting on the
// product basis with tau = n*hbar and h1 = (j + 1/2)*hbar.
struct ProductHamiltonian {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
};

// Multiplies each coefficient by e^{-i t H'(n hbar, (j+1/2) hbar)/hbar};
// exactly unitary.  Raises TruncationWarning when the boundary coefficients
// (extreme n rows or the top Hermite level) carry more than 1e-8 of the peak
// modulus, i.e. when the finite basis visibly clips the state.
ProductModeState product_mode_propagate(const ProductModeState& st,
                                        const ProductHamiltonian& hprime,
                                        double t);

// x-profile of a single Hermite level: f_j(x) = sum_n c[n][j] e^{inx}.
WaveFunction product_mode_level_profile(const ProductModeState& st,
                                        std::size_t j);

}  // namespace sclab
