#pragma once

#include <complex>

#include "sclab/fft.hpp"

namespace sclab {

// Ai(z) for real z: Maclaurin series for |z| <= 6, asymptotic expansions
// beyond.  Worst relative error ~1e-7 near z = +5 (series cancellation);
// elsewhere better than 1e-9.
double airy_ai(double z);

enum class AiryRegime { Bulk, Origin };

// Leading asymptotic profile of the delocalized packet one revival period
// after launch, with cubic dispersion strength c and quartic d.  x measures
// distance into the delocalized tail from the revival center (for c < 0 the
// tail extends backward and x is measured into it).
//
// Bulk (0 < x <= 2*pi): sum over wraps y_k = x + 2*pi*k of
//   sqrt(2) pi^{-1/4} (6 pi s c)^{-1/4} y^{-1/4} e^{-y/(12 pi s c)}
//     * e^{-i d y^2/(18 pi s c^2)} * sin((2/3) z^{3/2} + pi/4),
//   z = y/(6 pi s c hbar)^{1/3},
// truncated once the damped amplitude falls below 1e-12.
//
// Origin (|x| = O(hbar^{1/3})): hbar^{-1/12} (sc)^{-1/3} Ai(-x/(sc hbar^beta)^{1/3})
// with beta = origin_scale_exponent; the hbar-bearing scale beta = 1 is the
// default, and the experiment fits beta against the exact propagator.  The
// Airy argument runs negative into the tail so its oscillations line up with
// the delocalized side.
cplx airy_profile(double x, int s, double c, double d, double hbar,
                  AiryRegime regime, double origin_scale_exponent = 1.0);

// Leading modulus profile for the squeezed launch state (squeeze exponent
// eps): hbar^{-eps/2} (s|c|/4)^{-1/4} e^{-x/(s|c| hbar^eps)}.
cplx squeezed_profile(double x, int s, double c, double eps, double hbar);

}  // namespace sclab
