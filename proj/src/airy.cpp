#include "sclab/airy.hpp"

#include <cmath>
#include <numbers>

#include "sclab/errors.hpp"

namespace sclab {

namespace {

constexpr double kAi0 = 0.35502805388781723926;    // Ai(0)
constexpr double kAip0 = -0.25881940379280679840;  // Ai'(0)

double airy_series(double z) {
  // Ai = Ai(0) f(z) + Ai'(0) g(z), f'' = z f with f(0)=1, g(0)=0, g'(0)=1
  double z3 = z * z * z;
  double f = 1.0, tf = 1.0;
  double g = z, tg = z;
  for (int k = 0; k < 60; ++k) {
    double dk = 3.0 * static_cast<double>(k);
    tf *= z3 / ((dk + 2.0) * (dk + 3.0));
    tg *= z3 / ((dk + 3.0) * (dk + 4.0));
    f += tf;
    g += tg;
    if (std::abs(tf) < 1e-18 && std::abs(tg) < 1e-18) break;
  }
  return kAi0 * f + kAip0 * g;
}

double airy_asymptotic_pos(double z) {
  // Ai(z) ~ e^{-zeta}/(2 sqrt(pi) z^{1/4}) * sum (-1)^k u_k zeta^{-k}
  double zeta = 2.0 / 3.0 * std::pow(z, 1.5);
  double sum = 1.0;
  double contr = 1.0;  // u_k / zeta^k
  for (int k = 1; k < 40; ++k) {
    double next =
        contr * (6.0 * k - 5.0) * (6.0 * k - 1.0) / (72.0 * k) / zeta;
    if (std::abs(next) >= std::abs(contr)) break;
    contr = next;
    sum += (k % 2 ? -contr : contr);
    if (contr < 1e-17) break;
  }
  return std::exp(-zeta) * sum /
         (2.0 * std::sqrt(std::numbers::pi) * std::pow(z, 0.25));
}

double airy_asymptotic_neg(double zbar) {
  // Ai(-z) ~ pi^{-1/2} z^{-1/4} (cos(zeta - pi/4) P + sin(zeta - pi/4) Q)
  double zeta = 2.0 / 3.0 * std::pow(zbar, 1.5);
  double p = 0.0, q = 0.0;
  double contr = 1.0;  // u_m / zeta^m
  for (int m = 0; m < 40; ++m) {
    if (m > 0) {
      double next = contr * (6.0 * m - 5.0) * (6.0 * m - 1.0) / (72.0 * m) / zeta;
      if (std::abs(next) >= std::abs(contr)) break;
      contr = next;
    }
    if (m % 2 == 0)
      p += ((m / 2) % 2 ? -contr : contr);
    else
      q += (((m - 1) / 2) % 2 ? -contr : contr);
    if (contr < 1e-17) break;
  }
  double ph = zeta - 0.25 * std::numbers::pi;
  return (std::cos(ph) * p + std::sin(ph) * q) /
         (std::sqrt(std::numbers::pi) * std::pow(zbar, 0.25));
}

}  // namespace

double airy_ai(double z) {
  if (z > 6.0) return airy_asymptotic_pos(z);
  if (z < -6.0) return airy_asymptotic_neg(-z);
  return airy_series(z);
}

cplx airy_profile(double x, int s, double c, double d, double hbar,
                  AiryRegime regime, double origin_scale_exponent) {
  if (s < 1) throw ConfigInvalid("revival index s must be >= 1");
  if (c == 0.0) throw ConfigInvalid("cubic coefficient must be nonzero");
  if (!(hbar > 0.0)) throw ConfigInvalid("hbar must be positive");
  if (c < 0.0) return std::conj(airy_profile(x, s, -c, -d, hbar, regime,
                                             origin_scale_exponent));

  double sc = static_cast<double>(s) * c;
  constexpr double pi = std::numbers::pi;

  if (regime == AiryRegime::Origin) {
    double scale = std::cbrt(sc * std::pow(hbar, origin_scale_exponent));
    if (std::abs(x) > 10.0 * scale)
      throw RegimeMismatch("origin regime holds only for |x| = O(hbar^{1/3})");
    // argument decreases with x so the oscillatory side faces the tail,
    // matching the propagated state
    return cplx{std::pow(hbar, -1.0 / 12.0) / std::cbrt(sc) *
                    airy_ai(-x / scale),
                0.0};
  }

  if (!(x > 0.0 && x <= 2.0 * pi))
    throw RegimeMismatch("bulk regime needs 0 < x <= 2*pi");

  double damp_len = 12.0 * pi * sc;
  double amp0 = std::sqrt(2.0) * std::pow(pi, -0.25) *
                std::pow(6.0 * pi * sc, -0.25);
  double zscale = std::cbrt(6.0 * pi * sc * hbar);
  cplx sum{0.0, 0.0};
  for (int k = 0;; ++k) {
    double y = x + 2.0 * pi * static_cast<double>(k);
    double amp = amp0 * std::pow(y, -0.25) * std::exp(-y / damp_len);
    if (amp < 1e-12) break;
    double z = y / zscale;
    double phase = 2.0 / 3.0 * std::pow(z, 1.5) + 0.25 * pi;
    double quart = -d * y * y / (18.0 * pi * sc * c);
    sum += amp * std::sin(phase) * std::exp(cplx{0.0, quart});
  }
  return sum;
}

cplx squeezed_profile(double x, int s, double c, double eps, double hbar) {
  if (s < 1) throw ConfigInvalid("revival index s must be >= 1");
  if (c == 0.0) throw ConfigInvalid("cubic coefficient must be nonzero");
  if (!(eps > 0.0 && eps < 1.0)) throw ConfigInvalid("eps must lie in (0,1)");
  if (!(x > 0.0 && x < 2.0 * std::numbers::pi))
    throw RegimeMismatch("profile defined for 0 < x < 2*pi");
  double sc = static_cast<double>(s) * std::abs(c);
  double loc = sc * std::pow(hbar, eps);
  double amp = std::pow(hbar, -0.5 * eps) * std::pow(0.25 * sc, -0.25);
  return cplx{amp * std::exp(-x / loc), 0.0};
}

}  // namespace sclab
