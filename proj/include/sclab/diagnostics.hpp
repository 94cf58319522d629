#pragma once

#include "sclab/wavefunction.hpp"

namespace sclab {

// Inverse participation ratio dx * sum |psi|^4; for a unit-norm state this
// is 1/(effective support length), so localization grows it.
double ipr(const WaveFunction& f);

struct Peak {
  double x = 0.0;       // sub-grid position from quadratic interpolation
  double density = 0.0; // |psi|^2 at the interpolated peak
};

// Highest density maximum; PeakNotFound when the density has no curvature
// (flat profile) at its maximum.
Peak density_peak(const WaveFunction& f);

double fidelity(const WaveFunction& a, const WaveFunction& b);

}  // namespace sclab
