#pragma once

#include <functional>
#include <vector>

#include "sclab/coherent.hpp"
#include "sclab/wavefunction.hpp"

namespace sclab {

// Momentum-space symbol h(xi) applied as the exact multiplier
// e^{-i t h(n hbar)/hbar} on circle Fourier coefficients.  Polynomial laws
// are evaluated in compensated (hi/lo) arithmetic before reduction mod 2*pi;
// general callables run in plain double behind a precision guard.
class DispersionLaw {
 public:
  // h(xi) = k2 * xi^2/2 + c * xi^3 + d * xi^4 + sum_i higher[i] * xi^(5+i)
  static DispersionLaw polynomial(double k2, double c = 0.0, double d = 0.0,
                                  std::vector<double> higher = {});
  static DispersionLaw callable(std::function<double(double)> h);

  bool is_polynomial() const { return fn_ == nullptr; }
  double operator()(double xi) const;

  // t*h(n*hbar)/hbar reduced to [-pi, pi)
  double reduced_phase(double t, double n, double hbar) const;

 private:
  DispersionLaw() = default;
  std::vector<double> coef_;  // coef_[k] multiplies xi^k
  std::function<double(double)> fn_;
};

WaveFunction propagate_dispersion(const WaveFunction& f, const DispersionLaw& law,
                                  double t);

// Decomposition of the quadratic-law state at t = (p/q) * 2*pi/hbar into
// packets sitting at the q-division points of the circle.
struct RevivalPrediction {
  std::vector<double> sites;  // 2*pi*j/q, j = 0..q-1
  std::vector<cplx> weights;  // unit l2 norm
  double time;
};

RevivalPrediction fractional_revival(long p, long q, const CoherentStateSpec& spec,
                                     double hbar);

// Builds sum_j w_j psi_{(spec.q + site_j, spec.p)} on the given grid.
WaveFunction revival_superposition(const RevivalPrediction& pred,
                                   const CoherentStateSpec& spec,
                                   const Grid& grid, double hbar);

}  // namespace sclab
