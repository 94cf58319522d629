#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace sclab {

struct Vec2 {
  double x = 0.0;
  double xi = 0.0;
};

// Row-major [[a, b], [c, d]].
struct Mat2 {
  double a = 1.0, b = 0.0;
  double c = 0.0, d = 1.0;
};

Vec2 apply(const Mat2& m, const Vec2& z);
Mat2 mul(const Mat2& l, const Mat2& r);
// Largest singular value.
double operator_norm(const Mat2& m);

// Rotation to coordinates in which the saddle at the origin reads
// rate * X * Xi (up to sign) at leading order.
struct NormalChart {
  Mat2 rotation;
  double rate = 1.0;
};

// Smooth symbol on the plane with exact first and second derivatives.
struct HamiltonianSystem {
  std::function<double(Vec2)> h;
  std::function<Vec2(Vec2)> grad;  // (d_x h, d_xi h)
  std::function<Mat2(Vec2)> hess;  // [[h_xx, h_xxi], [h_xxi, h_xixi]]
  std::string name;
  bool separable = false;  // h = T(xi) + V(x)
  std::optional<NormalChart> chart;
};

namespace systems {
HamiltonianSystem harmonic();                // (x^2 + xi^2)/2
HamiltonianSystem free_particle();           // xi^2/2
HamiltonianSystem linear_hyperbolic();       // x*xi
HamiltonianSystem double_well();             // xi^2 + x^2(x^2 - 1)
HamiltonianSystem double_well_normalized();  // the same, halved (unit rate)
HamiltonianSystem pendulum();                // xi^2/2 + cos x - 1
HamiltonianSystem harper();                  // cos xi - cos x
HamiltonianSystem anharmonic();              // xi^2 + x^2 + 0.2 x^4
}  // namespace systems

struct DerivativeCheck {
  double grad_err = 0.0;  // worst relative mismatch against central differences
  double hess_err = 0.0;
};

DerivativeCheck check_derivatives(const HamiltonianSystem& sys,
                                  std::uint64_t seed = 0x5eedUL, int points = 20);

enum class Method { automatic, verlet, midpoint, yoshida4 };

struct Trajectory {
  std::vector<double> times;
  std::vector<Vec2> points;
  std::vector<double> action;  // integral of xi dx - h dt from t = 0
  std::vector<double> energy;  // h along the orbit
  double error_estimate = 0.0;  // accumulated step-doubling estimate
};

// Fixed-step symmetric integration; each step advances by two half steps and
// prices the local error against a single full step.  Throws
// EnergyDriftExceeded as soon as |h - h(z0)| crosses drift_tol.
Trajectory integrate_flow(const HamiltonianSystem& sys, Vec2 z0, double T,
                          double dt, Method method = Method::automatic,
                          double drift_tol = 1e-8);

struct TangentFlow {
  std::vector<double> times;
  std::vector<Mat2> matrices;
  std::vector<double> dets;  // compensated determinants, one per matrix
};

// Co-integrates dM/dt = J Hess(h) M along the orbit.  The matrix is carried
// in hi/lo pairs: the determinant of a product of unit shears is one only as
// long as the accumulation does not round it away.
TangentFlow tangent_flow(const HamiltonianSystem& sys, Vec2 z0, double T,
                         double dt, Method method = Method::automatic);

// sup over the sampled grid of log ||dPhi^t|| / t; zero when the tangent
// norm never leaves [0, 10].
double estimate_mu(const HamiltonianSystem& sys, Vec2 z0, double T,
                   double dt = 1e-3);

enum class Branch { plus, minus };

struct SeparatrixOptions {
  double delta = 1e-6;         // seed distance along the unstable eigenvector
  double dt = 2e-3;            // step, in rate-normalized time
  double forward_span = 28.0;  // rate-normalized
  double backward_span = 6.0;
  double drift_tol = 1e-8;
};

struct SeparatrixCurve {
  Trajectory traj;  // t = 0 at the seed
  Vec2 seed;
  Vec2 unstable_dir;  // unit eigenvectors of J Hess at the origin
  Vec2 stable_dir;
  double rate = 1.0;  // positive eigenvalue of J Hess at the origin
  Branch branch = Branch::plus;
};

// Unstable branch of {h = 0} through the saddle at the origin, seeded delta
// along the unstable eigenvector and integrated both ways.
SeparatrixCurve separatrix(const HamiltonianSystem& sys, Branch branch,
                           const SeparatrixOptions& opts = {});

struct T0Options {
  double ladder_min = 4.0;  // rate-normalized arc times
  double ladder_max = 12.0;
  double ladder_step = 1.0;
  double residual_tol = 1e-4;
  double anchor_offset = 0.0;  // shifts the apex anchor along the curve
};

// Accelerated limit of x(-s) xi(s) e^{2s}; returns the log of its magnitude.
double t0_extrapolate(const std::function<double(double)>& x_minus_s,
                      const std::function<double(double)>& xi_plus_s,
                      const T0Options& opts = {});

// The same limit read off a separatrix curve: outgoing coordinate along the
// origin's unstable eigenvector, incoming coordinate along the destination
// saddle's stable eigenvector, anchored at the apex of the lobe.  The value
// is checked against a shifted anchor before it is returned.
double compute_t0(const HamiltonianSystem& sys, const SeparatrixCurve& curve,
                  const T0Options& opts = {});

}  // namespace sclab
