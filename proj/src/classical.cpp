#include "sclab/classical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "sclab/dd.hpp"
#include "sclab/errors.hpp"

namespace sclab {

namespace {

inline Vec2 vadd(Vec2 a, Vec2 b) { return {a.x + b.x, a.xi + b.xi}; }
inline Vec2 vsub(Vec2 a, Vec2 b) { return {a.x - b.x, a.xi - b.xi}; }
inline Vec2 vscale(double s, Vec2 a) { return {s * a.x, s * a.xi}; }
inline double vdot(Vec2 a, Vec2 b) { return a.x * b.x + a.xi * b.xi; }
inline double vnorm(Vec2 a) { return std::hypot(a.x, a.xi); }
inline double vinf(Vec2 a) { return std::max(std::abs(a.x), std::abs(a.xi)); }

// Tangent matrix carried in hi/lo pairs; the determinant of dPhi^t is a
// difference of two nearly equal products once the entries grow like e^{mu t},
// and plain double loses it long before the entries overflow.
struct Mat2Dd {
  dd::Dd a{1.0, 0.0}, b{0.0, 0.0}, c{0.0, 0.0}, d{1.0, 0.0};
};

Mat2Dd mul_dd(const Mat2& l, const Mat2Dd& r) {
  Mat2Dd out;
  out.a = dd::add(dd::mul(r.a, l.a), dd::mul(r.c, l.b));
  out.b = dd::add(dd::mul(r.b, l.a), dd::mul(r.d, l.b));
  out.c = dd::add(dd::mul(r.a, l.c), dd::mul(r.c, l.d));
  out.d = dd::add(dd::mul(r.b, l.c), dd::mul(r.d, l.d));
  return out;
}

double det_dd(const Mat2Dd& m) {
  dd::Dd det = dd::sub(dd::mul(m.a, m.d), dd::mul(m.b, m.c));
  return det.hi + det.lo;
}

Mat2 round_dd(const Mat2Dd& m) { return {m.a.hi, m.b.hi, m.c.hi, m.d.hi}; }

struct Plan {
  bool yoshida = true;
  bool verlet_base = true;  // else implicit midpoint
  int order = 4;
};

Plan make_plan(Method method, const HamiltonianSystem& sys) {
  switch (method) {
    case Method::automatic:
    case Method::yoshida4:
      return {true, sys.separable, 4};
    case Method::verlet:
      if (!sys.separable)
        throw ConfigInvalid("verlet steps need a separable symbol; " +
                            sys.name + " is not");
      return {false, true, 2};
    case Method::midpoint:
      return {false, false, 2};
  }
  throw ConfigInvalid("unknown integration method");
}

// One kick-drift-kick step.  The composed shears are the exact Jacobian of
// the map when the symbol splits as T(xi) + V(x).
Vec2 step_verlet(const HamiltonianSystem& sys, Vec2 z, double dt,
                 Mat2* tangent) {
  double half = 0.5 * dt;
  Vec2 g0 = sys.grad(z);
  double xi1 = z.xi - half * g0.x;
  Vec2 g1 = sys.grad({z.x, xi1});
  double x1 = z.x + dt * g1.xi;
  Vec2 g2 = sys.grad({x1, xi1});
  double xi2 = xi1 - half * g2.x;
  if (tangent != nullptr) {
    double k0 = -half * sys.hess(z).a;
    double dr = dt * sys.hess({z.x, xi1}).d;
    double k2 = -half * sys.hess({x1, xi1}).a;
    Mat2 kd{1.0 + dr * k0, dr, k0, 1.0};  // drift after kick
    *tangent = {kd.a, kd.b, k2 * kd.a + kd.c, k2 * kd.b + kd.d};
  }
  return {x1, xi2};
}

Vec2 hamiltonian_field(const HamiltonianSystem& sys, Vec2 z) {
  Vec2 g = sys.grad(z);
  return {g.xi, -g.x};
}

// Implicit midpoint via fixed-point iteration; its Jacobian is the Cayley
// transform of dt J Hess at the midpoint, symplectic by construction.
Vec2 step_midpoint(const HamiltonianSystem& sys, Vec2 z, double dt,
                   Mat2* tangent) {
  Vec2 w = vadd(z, vscale(dt, hamiltonian_field(sys, z)));
  double prev_move = std::numeric_limits<double>::infinity();
  double move = prev_move;
  for (int it = 0; it < 100; ++it) {
    Vec2 probe = vscale(0.5, vadd(z, w));
    Vec2 next = vadd(z, vscale(dt, hamiltonian_field(sys, probe)));
    move = vinf(vsub(next, w));
    w = next;
    if (move == 0.0) break;
    if (move >= prev_move) break;  // roundoff floor or divergence
    prev_move = move;
  }
  if (move > 1e-12 * (1.0 + vinf(w)))
    throw StepUnconverged("implicit midpoint stalled; reduce dt");
  Vec2 mid = vscale(0.5, vadd(z, w));
  if (tangent != nullptr) {
    Mat2 H = sys.hess(mid);
    double s = 0.5 * dt;
    // B = (dt/2) J Hess
    double ba = s * H.b, bb = s * H.d, bc = -s * H.a, bd = -s * H.b;
    double det = (1.0 - ba) * (1.0 - bd) - bb * bc;
    Mat2 inv{(1.0 - bd) / det, bb / det, bc / det, (1.0 - ba) / det};
    Mat2 plus{1.0 + ba, bb, bc, 1.0 + bd};
    *tangent = mul(inv, plus);
  }
  return w;
}

Vec2 step_base(const HamiltonianSystem& sys, const Plan& plan, Vec2 z,
               double dt, Mat2* tangent) {
  return plan.verlet_base ? step_verlet(sys, z, dt, tangent)
                          : step_midpoint(sys, z, dt, tangent);
}

Vec2 step_unit(const HamiltonianSystem& sys, const Plan& plan, Vec2 z,
               double dt, Mat2* tangent) {
  if (!plan.yoshida) return step_base(sys, plan, z, dt, tangent);
  const double g1 = 1.0 / (2.0 - std::cbrt(2.0));
  const double g2 = 1.0 - 2.0 * g1;
  Mat2 s1, s2, s3;
  Mat2* t1 = tangent ? &s1 : nullptr;
  Mat2* t2 = tangent ? &s2 : nullptr;
  Mat2* t3 = tangent ? &s3 : nullptr;
  z = step_base(sys, plan, z, g1 * dt, t1);
  z = step_base(sys, plan, z, g2 * dt, t2);
  z = step_base(sys, plan, z, g1 * dt, t3);
  if (tangent != nullptr) *tangent = mul(s3, mul(s2, s1));
  return z;
}

double lagrangian(const HamiltonianSystem& sys, Vec2 z) {
  return z.xi * sys.grad(z).xi - sys.h(z);
}

// Shared fixed-step driver.  Advances by paired half steps, prices each step
// against a single full one, accumulates the action by Simpson quadrature on
// the half-step midpoint, and trips the drift guard against e_ref.
struct Leg {
  std::vector<double> times;
  std::vector<Vec2> points;
  std::vector<double> action;
  std::vector<double> energy;
  double error_estimate = 0.0;
};

Leg run_leg(const HamiltonianSystem& sys, const Plan& plan, Vec2 z0, long n,
            double dt, double drift_tol, double e_ref, double t0) {
  Leg leg;
  leg.times.reserve(static_cast<std::size_t>(n));
  leg.points.reserve(static_cast<std::size_t>(n));
  leg.action.reserve(static_cast<std::size_t>(n));
  leg.energy.reserve(static_cast<std::size_t>(n));
  double divisor = (plan.order == 4) ? 15.0 : 3.0;
  Vec2 z = z0;
  double act = 0.0;
  for (long k = 1; k <= n; ++k) {
    Vec2 zmid = step_unit(sys, plan, z, 0.5 * dt, nullptr);
    Vec2 znew = step_unit(sys, plan, zmid, 0.5 * dt, nullptr);
    Vec2 zfull = step_unit(sys, plan, z, dt, nullptr);
    leg.error_estimate += vinf(vsub(znew, zfull)) / divisor;
    act += dt / 6.0 *
           (lagrangian(sys, z) + 4.0 * lagrangian(sys, zmid) +
            lagrangian(sys, znew));
    double e = sys.h(znew);
    if (std::abs(e - e_ref) > drift_tol)
      throw EnergyDriftExceeded("energy drifted by " +
                                std::to_string(e - e_ref) + " at t = " +
                                std::to_string(t0 + k * dt) +
                                "; reduce dt");
    leg.times.push_back(t0 + static_cast<double>(k) * dt);
    leg.points.push_back(znew);
    leg.action.push_back(act);
    leg.energy.push_back(e);
    z = znew;
  }
  return leg;
}

void check_span_args(double T, double dt) {
  if (!(T > 0.0) || !(dt > 0.0))
    throw ConfigInvalid("integration span and step must be positive");
  if (dt > T / 100.0 * (1.0 + 1e-12))
    throw ConfigInvalid("dt must not exceed T/100");
}

struct SaddleFrame {
  double rate = 0.0;
  Vec2 unstable{};
  Vec2 stable{};
};

Vec2 normalized_or(Vec2 v, Vec2 fallback) {
  double n = vnorm(v);
  if (n < 1e-12) {
    v = fallback;
    n = vnorm(v);
  }
  return vscale(1.0 / n, v);
}

// Eigenframe of J Hess at a critical point; throws unless the eigenvalues
// are real and opposite.
SaddleFrame saddle_frame(const HamiltonianSystem& sys, Vec2 z) {
  Mat2 H = sys.hess(z);
  double p = H.b;
  double disc = p * p - H.a * H.d;
  if (!(disc > 0.0))
    throw NotHyperbolic("eigenvalues of J Hess at (" + std::to_string(z.x) +
                        ", " + std::to_string(z.xi) +
                        ") are not real and opposite");
  double lam = std::sqrt(disc);
  SaddleFrame f;
  f.rate = lam;
  f.unstable = normalized_or({H.d, lam - p}, {lam + p, -H.a});
  f.stable = normalized_or({H.d, -lam - p}, {p - lam, -H.a});
  return f;
}

Vec2 newton_critical_point(const HamiltonianSystem& sys, Vec2 z) {
  for (int it = 0; it < 50; ++it) {
    Vec2 g = sys.grad(z);
    if (vinf(g) < 1e-13) return z;
    Mat2 H = sys.hess(z);
    double det = H.a * H.d - H.b * H.b;
    if (std::abs(det) < 1e-14)
      throw NoConvergence("degenerate hessian while locating the saddle");
    z = {z.x - (H.d * g.x - H.b * g.xi) / det,
         z.xi - (H.a * g.xi - H.b * g.x) / det};
  }
  throw NoConvergence("saddle search did not converge");
}

// Two rounds of Aitken acceleration; returns the last accelerated value and
// the gap to its predecessor.
std::pair<double, double> aitken_limit(std::vector<double> v) {
  for (int level = 0; level < 2 && v.size() >= 3; ++level) {
    std::vector<double> w;
    w.reserve(v.size() - 2);
    for (std::size_t i = 0; i + 2 < v.size(); ++i) {
      double d1 = v[i + 2] - v[i + 1];
      double d2 = (v[i + 2] - v[i + 1]) - (v[i + 1] - v[i]);
      double cand = v[i + 2];
      // a second difference at roundoff scale only amplifies noise
      double floor = 1e-14 * (std::abs(v[i]) + std::abs(v[i + 1]) +
                              std::abs(v[i + 2]));
      if (std::abs(d2) > floor) {
        double corr = v[i + 2] - d1 * d1 / d2;
        if (std::isfinite(corr)) cand = corr;
      }
      w.push_back(cand);
    }
    v = std::move(w);
  }
  double limit = v.back();
  double resid = v.size() >= 2 ? std::abs(v.back() - v[v.size() - 2]) : 0.0;
  return {limit, resid};
}

std::vector<double> ladder_values(const T0Options& opts) {
  std::vector<double> s;
  for (double v = opts.ladder_min; v <= opts.ladder_max + 1e-9;
       v += opts.ladder_step)
    s.push_back(v);
  if (s.size() < 3)
    throw ConfigInvalid("the extrapolation ladder needs at least three rungs");
  return s;
}

double settle_limit(const std::vector<double>& prods, double tol) {
  auto [limit, resid] = aitken_limit(prods);
  if (limit == 0.0 || !std::isfinite(limit) ||
      !(resid <= tol * std::abs(limit)))
    throw NoConvergence("separatrix product did not settle on the ladder");
  return std::log(std::abs(limit));
}

}  // namespace

Vec2 apply(const Mat2& m, const Vec2& z) {
  return {m.a * z.x + m.b * z.xi, m.c * z.x + m.d * z.xi};
}

Mat2 mul(const Mat2& l, const Mat2& r) {
  return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d,
          l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
}

double operator_norm(const Mat2& m) {
  double f2 = m.a * m.a + m.b * m.b + m.c * m.c + m.d * m.d;
  double det = m.a * m.d - m.b * m.c;
  double disc = f2 * f2 - 4.0 * det * det;
  return std::sqrt(0.5 * (f2 + std::sqrt(std::max(disc, 0.0))));
}

DerivativeCheck check_derivatives(const HamiltonianSystem& sys,
                                  std::uint64_t seed, int points) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  const double e = 1e-5;
  DerivativeCheck out;
  auto rel = [](double got, double want) {
    return std::abs(got - want) / std::max(1.0, std::abs(want));
  };
  for (int k = 0; k < points; ++k) {
    Vec2 z{coord(rng), coord(rng)};
    Vec2 g = sys.grad(z);
    double gx = (sys.h({z.x + e, z.xi}) - sys.h({z.x - e, z.xi})) / (2.0 * e);
    double gxi = (sys.h({z.x, z.xi + e}) - sys.h({z.x, z.xi - e})) / (2.0 * e);
    out.grad_err = std::max({out.grad_err, rel(gx, g.x), rel(gxi, g.xi)});
    Mat2 H = sys.hess(z);
    Vec2 dxp = sys.grad({z.x + e, z.xi});
    Vec2 dxm = sys.grad({z.x - e, z.xi});
    Vec2 dpp = sys.grad({z.x, z.xi + e});
    Vec2 dpm = sys.grad({z.x, z.xi - e});
    out.hess_err = std::max(
        {out.hess_err, rel((dxp.x - dxm.x) / (2.0 * e), H.a),
         rel((dxp.xi - dxm.xi) / (2.0 * e), H.b),
         rel((dpp.x - dpm.x) / (2.0 * e), H.b),
         rel((dpp.xi - dpm.xi) / (2.0 * e), H.d)});
  }
  return out;
}

Trajectory integrate_flow(const HamiltonianSystem& sys, Vec2 z0, double T,
                          double dt, Method method, double drift_tol) {
  check_span_args(T, dt);
  Plan plan = make_plan(method, sys);
  long n = std::lround(T / dt);
  double step = T / static_cast<double>(n);
  double e0 = sys.h(z0);
  Leg leg = run_leg(sys, plan, z0, n, step, drift_tol, e0, 0.0);
  Trajectory traj;
  traj.times.push_back(0.0);
  traj.points.push_back(z0);
  traj.action.push_back(0.0);
  traj.energy.push_back(e0);
  traj.times.insert(traj.times.end(), leg.times.begin(), leg.times.end());
  traj.points.insert(traj.points.end(), leg.points.begin(), leg.points.end());
  traj.action.insert(traj.action.end(), leg.action.begin(), leg.action.end());
  traj.energy.insert(traj.energy.end(), leg.energy.begin(), leg.energy.end());
  traj.error_estimate = leg.error_estimate;
  return traj;
}

TangentFlow tangent_flow(const HamiltonianSystem& sys, Vec2 z0, double T,
                         double dt, Method method) {
  check_span_args(T, dt);
  Plan plan = make_plan(method, sys);
  long n = std::lround(T / dt);
  double step = T / static_cast<double>(n);
  double e0 = sys.h(z0);
  TangentFlow flow;
  flow.times.reserve(static_cast<std::size_t>(n) + 1);
  flow.matrices.reserve(static_cast<std::size_t>(n) + 1);
  flow.dets.reserve(static_cast<std::size_t>(n) + 1);
  flow.times.push_back(0.0);
  flow.matrices.push_back(Mat2{});
  flow.dets.push_back(1.0);
  Mat2Dd acc;
  Vec2 z = z0;
  for (long k = 1; k <= n; ++k) {
    Mat2 s1, s2;
    Vec2 zmid = step_unit(sys, plan, z, 0.5 * step, &s1);
    Vec2 znew = step_unit(sys, plan, zmid, 0.5 * step, &s2);
    acc = mul_dd(mul(s2, s1), acc);
    double e = sys.h(znew);
    if (std::abs(e - e0) > 1e-8)
      throw EnergyDriftExceeded("energy drifted by " + std::to_string(e - e0) +
                                " during tangent integration; reduce dt");
    flow.times.push_back(static_cast<double>(k) * step);
    flow.matrices.push_back(round_dd(acc));
    flow.dets.push_back(det_dd(acc));
    z = znew;
  }
  return flow;
}

double estimate_mu(const HamiltonianSystem& sys, Vec2 z0, double T,
                   double dt) {
  TangentFlow flow = tangent_flow(sys, z0, T, dt);
  if (operator_norm(flow.matrices.back()) <= 10.0) return 0.0;
  double mu = 0.0;
  for (std::size_t i = 1; i < flow.times.size(); ++i)
    mu = std::max(mu,
                  std::log(operator_norm(flow.matrices[i])) / flow.times[i]);
  return mu;
}

SeparatrixCurve separatrix(const HamiltonianSystem& sys, Branch branch,
                           const SeparatrixOptions& opts) {
  if (!(opts.delta > 0.0) || !(opts.dt > 0.0) || !(opts.forward_span > 0.0) ||
      !(opts.backward_span >= 0.0))
    throw ConfigInvalid("separatrix spans, step and seed must be positive");
  Vec2 g0 = sys.grad({0.0, 0.0});
  if (vinf(g0) > 1e-10)
    throw NotHyperbolic("the origin is not a fixed point of " + sys.name);
  SaddleFrame frame = saddle_frame(sys, {0.0, 0.0});
  double sign = branch == Branch::plus ? 1.0 : -1.0;
  Vec2 seed = vscale(sign * opts.delta, frame.unstable);
  double dt_phys = opts.dt / frame.rate;
  long nf = std::lround(opts.forward_span / opts.dt);
  long nb = std::lround(opts.backward_span / opts.dt);
  Plan plan = make_plan(Method::automatic, sys);
  double e0 = sys.h(seed);
  Leg fwd = run_leg(sys, plan, seed, nf, dt_phys, opts.drift_tol, e0, 0.0);
  Leg bwd = run_leg(sys, plan, seed, nb, -dt_phys, opts.drift_tol, e0, 0.0);
  SeparatrixCurve curve;
  curve.seed = seed;
  curve.unstable_dir = frame.unstable;
  curve.stable_dir = frame.stable;
  curve.rate = frame.rate;
  curve.branch = branch;
  Trajectory& traj = curve.traj;
  std::size_t total = bwd.times.size() + 1 + fwd.times.size();
  traj.times.reserve(total);
  traj.points.reserve(total);
  traj.action.reserve(total);
  traj.energy.reserve(total);
  for (std::size_t i = bwd.times.size(); i-- > 0;) {
    traj.times.push_back(bwd.times[i]);
    traj.points.push_back(bwd.points[i]);
    traj.action.push_back(bwd.action[i]);
    traj.energy.push_back(bwd.energy[i]);
  }
  traj.times.push_back(0.0);
  traj.points.push_back(seed);
  traj.action.push_back(0.0);
  traj.energy.push_back(e0);
  traj.times.insert(traj.times.end(), fwd.times.begin(), fwd.times.end());
  traj.points.insert(traj.points.end(), fwd.points.begin(), fwd.points.end());
  traj.action.insert(traj.action.end(), fwd.action.begin(), fwd.action.end());
  traj.energy.insert(traj.energy.end(), fwd.energy.begin(), fwd.energy.end());
  traj.error_estimate = fwd.error_estimate + bwd.error_estimate;
  return curve;
}

double t0_extrapolate(const std::function<double(double)>& x_minus_s,
                      const std::function<double(double)>& xi_plus_s,
                      const T0Options& opts) {
  std::vector<double> prods;
  for (double s : ladder_values(opts))
    prods.push_back(x_minus_s(s) * xi_plus_s(s) * std::exp(2.0 * s));
  return settle_limit(prods, opts.residual_tol);
}

double compute_t0(const HamiltonianSystem& sys, const SeparatrixCurve& curve,
                  const T0Options& opts) {
  const Trajectory& tr = curve.traj;
  if (tr.points.size() < 3)
    throw NoConvergence("separatrix curve is empty");
  double lam = curve.rate;
  double dt_phys = tr.times[1] - tr.times[0];
  double dtn = lam * dt_phys;  // grid spacing in rate-normalized time
  Vec2 zd = newton_critical_point(sys, tr.points.back());
  SaddleFrame dest = saddle_frame(sys, zd);
  bool homoclinic = vnorm(zd) < 1e-3;
  std::size_t i0 = static_cast<std::size_t>(
      std::lround(-tr.times.front() / dt_phys));
  std::size_t apex = i0;
  double best = -1.0;
  for (std::size_t i = i0; i < tr.points.size(); ++i) {
    double score = homoclinic
                       ? vnorm(tr.points[i])
                       : -std::abs(vnorm(tr.points[i]) -
                                   vnorm(vsub(tr.points[i], zd)));
    if (score > best) {
      best = score;
      apex = i;
    }
  }
  auto eval_at = [&](long anchor) {
    std::vector<double> prods;
    for (double s : ladder_values(opts)) {
      long k = std::lround(s / dtn);
      double sk = static_cast<double>(k) * dtn;
      long im = anchor - k;
      long ip = anchor + k;
      if (im < 0 || ip >= static_cast<long>(tr.points.size()))
        throw NoConvergence(
            "separatrix curve is too short for the extrapolation ladder");
      double out = vdot(tr.points[static_cast<std::size_t>(im)],
                        curve.unstable_dir);
      double in = vdot(vsub(tr.points[static_cast<std::size_t>(ip)], zd),
                       dest.stable);
      prods.push_back(out * in * std::exp(2.0 * sk));
    }
    return settle_limit(prods, opts.residual_tol);
  };
  long anchor = static_cast<long>(apex) + std::lround(opts.anchor_offset / dtn);
  double t0 = eval_at(anchor);
  double t0_shifted = eval_at(anchor - std::lround(0.5 / dtn));
  if (std::abs(t0 - t0_shifted) > opts.residual_tol)
    throw NoConvergence("separatrix delay depends on the anchor; t0 = " +
                        std::to_string(t0) + " vs " +
                        std::to_string(t0_shifted));
  return t0;
}

namespace systems {

namespace {
constexpr double kR = std::numbers::sqrt2 / 2.0;
}

HamiltonianSystem harmonic() {
  HamiltonianSystem sys;
  sys.h = [](Vec2 z) { return 0.5 * (z.x * z.x + z.xi * z.xi); };
  sys.grad = [](Vec2 z) { return Vec2{z.x, z.xi}; };
  sys.hess = [](Vec2) { return Mat2{1.0, 0.0, 0.0, 1.0}; };
  sys.name = "harmonic";
  sys.separable = true;
  return sys;
}

HamiltonianSystem free_particle() {
  HamiltonianSystem sys;
  sys.h = [](Vec2 z) { return 0.5 * z.xi * z.xi; };
  sys.grad = [](Vec2 z) { return Vec2{0.0, z.xi}; };
  sys.hess = [](Vec2) { return Mat2{0.0, 0.0, 0.0, 1.0}; };
  sys.name = "free";
  sys.separable = true;
  return sys;
}

HamiltonianSystem linear_hyperbolic() {
  HamiltonianSystem sys;
  sys.h = [](Vec2 z) { return z.x * z.xi; };
  sys.grad = [](Vec2 z) { return Vec2{z.xi, z.x}; };
  sys.hess = [](Vec2) { return Mat2{0.0, 1.0, 1.0, 0.0}; };
  sys.name = "linear-hyperbolic";
  sys.separable = false;
  sys.chart = NormalChart{Mat2{1.0, 0.0, 0.0, 1.0}, 1.0};
  return sys;
}

HamiltonianSystem double_well() {
  HamiltonianSystem sys;
  sys.h = [](Vec2 z) {
    return z.xi * z.xi + z.x * z.x * (z.x * z.x - 1.0);
  };
  sys.grad = [](Vec2 z) {
    return Vec2{4.0 * z.x * z.x * z.x - 2.0 * z.x, 2.0 * z.xi};
  };
  sys.hess = [](Vec2 z) {
    return Mat2{12.0 * z.x * z.x - 2.0, 0.0, 0.0, 2.0};
  };
  sys.name = "double-well";
  sys.separable = true;
  sys.chart = NormalChart{Mat2{kR, kR, -kR, kR}, 2.0};
  return sys;
}

HamiltonianSystem double_well_normalized() {
  HamiltonianSystem sys;
  sys.h = [](Vec2 z) {
    return 0.5 * (z.xi * z.xi + z.x * z.x * (z.x * z.x - 1.0));
  };
  sys.grad = [](Vec2 z) {
    return Vec2{2.0 * z.x * z.x * z.x - z.x, z.xi};
  };
  sys.hess = [](Vec2 z) {
    return Mat2{6.0 * z.x * z.x - 1.0, 0.0, 0.0, 1.0};
  };
  sys.name = "double-well-normalized";
  sys.separable = true;
  sys.chart = NormalChart{Mat2{kR, kR, -kR, kR}, 1.0};
  return sys;
}

HamiltonianSystem pendulum() {
  HamiltonianSystem sys;
  sys.h = [](Vec2 z) { return 0.5 * z.xi * z.xi + std::cos(z.x) - 1.0; };
  sys.grad = [](Vec2 z) { return Vec2{-std::sin(z.x), z.xi}; };
  sys.hess = [](Vec2 z) { return Mat2{-std::cos(z.x), 0.0, 0.0, 1.0}; };
  sys.name = "pendulum";
  sys.separable = true;
  // Saddles land on the diagonal m (pi sqrt2, pi sqrt2).
  sys.chart = NormalChart{Mat2{kR, -kR, kR, kR}, 1.0};
  return sys;
}

HamiltonianSystem harper() {
  HamiltonianSystem sys;
  sys.h = [](Vec2 z) { return std::cos(z.xi) - std::cos(z.x); };
  sys.grad = [](Vec2 z) { return Vec2{std::sin(z.x), -std::sin(z.xi)}; };
  sys.hess = [](Vec2 z) {
    return Mat2{std::cos(z.x), 0.0, 0.0, -std::cos(z.xi)};
  };
  sys.name = "harper";
  sys.separable = true;
  sys.chart = NormalChart{Mat2{kR, -kR, kR, kR}, 1.0};
  return sys;
}

HamiltonianSystem anharmonic() {
  HamiltonianSystem sys;
  sys.h = [](Vec2 z) {
    return z.xi * z.xi + z.x * z.x + 0.2 * z.x * z.x * z.x * z.x;
  };
  sys.grad = [](Vec2 z) {
    return Vec2{2.0 * z.x + 0.8 * z.x * z.x * z.x, 2.0 * z.xi};
  };
  sys.hess = [](Vec2 z) {
    return Mat2{2.0 + 2.4 * z.x * z.x, 0.0, 0.0, 2.0};
  };
  sys.name = "anharmonic";
  sys.separable = true;
  return sys;
}

}  // namespace systems

}  // namespace sclab
