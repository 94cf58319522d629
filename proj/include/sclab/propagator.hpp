#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <vector>

#include "sclab/fft.hpp"
#include "sclab/grid.hpp"
#include "sclab/wavefunction.hpp"

namespace sclab {

// Strang-split propagation of i hbar d/dt f = (-hbar^2 Lap + V(x)) f on a
// spectral grid.  Every step is half-potential / full-kinetic /
// half-potential with unit-modulus multipliers, so the norm survives to
// roundoff.  The first steps are re-run at dt/2 and the difference
// extrapolated over the full span; a projected change above 1e-6 in L2
// throws StepUnconverged.  Line grids keep a tally of the mass sitting in
// the outermost cells and abort with BoundaryMassLeak once it passes 1e-8
// (1e-10 for the initial state).
WaveFunction split_step(const WaveFunction& f,
                        const std::function<double(double)>& V, double t,
                        double dt);

struct TorusSpectral;

// Hermitian operator on the N-dimensional torus Hilbert space, hbar = 2pi/N.
class TorusOperator {
 public:
  // Row-major N x N entries; throws ConfigInvalid unless N >= 8 and the
  // matrix is Hermitian to 1e-12.
  TorusOperator(std::size_t dimension, std::vector<cplx> matrix);

  std::size_t dimension() const { return n_; }
  double hbar() const;
  const std::vector<cplx>& matrix() const { return m_; }
  cplx entry(std::size_t row, std::size_t col) const {
    return m_[row * n_ + col];
  }

  // Dense eigendecomposition, computed on first use and shared thereafter.
  const TorusSpectral& spectral() const;

 private:
  std::size_t n_;
  std::vector<cplx> m_;
  mutable std::shared_ptr<const TorusSpectral> spectral_;
};

// cos(p) - cos(q) quantized with the symmetric shift for cos(p) and the
// sampled diagonal for cos(q); real symmetric, trace zero, norm at most 2.
TorusOperator harper_operator(std::size_t dimension);

enum class PropagationRoute { automatic, dense, chebyshev };

// Exact evolution e^{-i t H / hbar} of a normalized state.  The automatic
// route eigensolves up to dimension 4096 and switches to a Chebyshev-Bessel
// expansion (tail below 1e-8) up to 16384; beyond that DimensionTooLarge.
std::vector<cplx> torus_propagate(const std::vector<cplx>& state,
                                  const TorusOperator& op, double t,
                                  PropagationRoute route =
                                      PropagationRoute::automatic);

enum class SymbolForm { position_only, momentum_only, separable_sum };

// Real phase-space observable P(x, xi) with its declared structure.  Only
// structures without cross terms are quadrable here; separable sums are
// spot-checked and genuine coupling raises UnsupportedSymbolForm.
struct ObservableSymbol {
  std::function<double(double, double)> symbol;
  SymbolForm form = SymbolForm::position_only;
};

// Position parts integrate P(x,0)|f|^2 dx; momentum parts integrate over
// the Fourier side at momenta hbar k_n.
double observable_expectation(const WaveFunction& f,
                              const ObservableSymbol& P);

}  // namespace sclab
