#pragma once

// Compensated (double-double) arithmetic for phase accumulation.  Quantum
// phases of order t/hbar overflow the 53-bit mantissa long before they
// overflow the exponent; carrying a hi/lo pair keeps ~32 significant digits
// through the reduction mod 2*pi.

#include <cmath>
#include <cstdint>

namespace sclab::dd {

struct Dd {
  double hi = 0.0;
  double lo = 0.0;
};

inline Dd two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

inline Dd quick_two_sum(double a, double b) {
  double s = a + b;
  return {s, b - (s - a)};
}

inline Dd two_prod(double a, double b) {
  double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline Dd from(double x) { return {x, 0.0}; }

inline Dd add(Dd a, Dd b) {
  Dd s = two_sum(a.hi, b.hi);
  s.lo += a.lo + b.lo;
  return quick_two_sum(s.hi, s.lo);
}

inline Dd add(Dd a, double b) {
  Dd s = two_sum(a.hi, b);
  s.lo += a.lo;
  return quick_two_sum(s.hi, s.lo);
}

inline Dd neg(Dd a) { return {-a.hi, -a.lo}; }

inline Dd sub(Dd a, Dd b) { return add(a, neg(b)); }

inline Dd mul(Dd a, Dd b) {
  Dd p = two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return quick_two_sum(p.hi, p.lo);
}

inline Dd mul(Dd a, double b) {
  Dd p = two_prod(a.hi, b);
  p.lo += a.lo * b;
  return quick_two_sum(p.hi, p.lo);
}

inline Dd div(Dd a, double b) {
  double q1 = a.hi / b;
  Dd p = two_prod(q1, b);
  double q2 = ((a.hi - p.hi) - p.lo + a.lo) / b;
  return quick_two_sum(q1, q2);
}

inline constexpr Dd kTwoPi{6.283185307179586, 2.4492935982947064e-16};
inline constexpr double kPi = 3.141592653589793;

// Reduce to [-pi, pi) before handing the angle to sin/cos.
inline double mod_two_pi(Dd x) {
  double n = std::round(x.hi / kTwoPi.hi);
  Dd r = add(x, mul(kTwoPi, -n));
  if (r.hi >= kPi) r = sub(r, kTwoPi);
  if (r.hi < -kPi) r = add(r, kTwoPi);
  return r.hi + r.lo;
}

}  // namespace sclab::dd
