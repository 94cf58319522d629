#pragma once

#include "sclab/grid.hpp"
#include "sclab/symbol.hpp"
#include "sclab/wavefunction.hpp"

namespace sclab {

// Packet centered at (q, p) with envelope `symbol` rescaled to width
// hbar^((1-squeeze_eps)/2); squeeze_eps = 0 is the standard coherent state.
struct CoherentStateSpec {
  double q = 0.0;
  double p = 0.0;
  SymbolFunction symbol;
  double squeeze_eps = 0.0;
};

// On a line grid: w^{-1/2} a((x-q)/w) e^{ipx/hbar}, w = hbar^((1-eps)/2).
// On a circle: the 2*pi-periodization of the same packet (exact Fourier-side
// construction for the Gaussian envelope, 5-period sum otherwise).  On a
// torus lattice (hbar * N = 2*pi): the mode sum over the line packet's
// integer Fourier content.  Always returned with unit norm.
WaveFunction make_coherent_state(const CoherentStateSpec& spec, const Grid& grid,
                                 double hbar);

}  // namespace sclab
