#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "oracles.hpp"
#include "sclab/airy.hpp"
#include "sclab/coherent.hpp"
#include "sclab/diagnostics.hpp"
#include "sclab/dispersion.hpp"
#include "sclab/errors.hpp"

using namespace sclab;
using std::numbers::pi;

namespace {

// (1/pi) * int_0^inf cos(u^3/3 + z u) du, split at U with an
// integration-by-parts tail (three boundary terms).
double airy_integral(double z) {
  const double U = 12.0;
  auto phi = [z](double u) { return u * u * u / 3.0 + z * u; };
  auto dphi = [z](double u) { return u * u + z; };
  double head = 0.0;
  for (int k = 0; k < 12; ++k)
    head += oracles::adaptive_simpson(
        [&](double u) { return std::cos(phi(u)); }, k, k + 1.0, 1e-12);
  double p1 = dphi(U);
  double gprime = 2.0 / (p1 * p1 * p1) - 12.0 * U * U / (p1 * p1 * p1 * p1);
  double tail = -std::sin(phi(U)) / p1 +
                std::cos(phi(U)) * 2.0 * U / (p1 * p1 * p1) -
                std::sin(phi(U)) * gprime / p1;
  return (head + tail) / pi;
}

// independent special-function oracle; J_{-1/3} rewritten through J and Y of
// positive order (negative orders are implementation-defined in <cmath>)
double airy_bessel(double z) {
  if (z == 0.0) return airy_integral(0.0);
  if (z > 0.0) {
    double zeta = 2.0 / 3.0 * std::pow(z, 1.5);
    return std::sqrt(z / 3.0) / pi * std::cyl_bessel_k(1.0 / 3.0, zeta);
  }
  double x = -z;
  double zeta = 2.0 / 3.0 * std::pow(x, 1.5);
  return std::sqrt(x) / 3.0 *
         (1.5 * std::cyl_bessel_j(1.0 / 3.0, zeta) -
          0.5 * std::sqrt(3.0) * std::cyl_neumann(1.0 / 3.0, zeta));
}

WaveFunction delocalized_state(double hbar, double c, int s, double eps,
                               std::size_t n = 4096) {
  auto psi0 = make_coherent_state({0.0, 0.0, SymbolFunction::gaussian(), eps},
                                  Grid::circle(n), hbar);
  auto law = DispersionLaw::polynomial(1.0, c, 0.0);  // h = xi^2/2 + c xi^3
  return propagate_dispersion(psi0, law, s * 2.0 * pi / hbar);
}

// |psi| at distance y past the revival center pi (s odd)
double tail_modulus(const WaveFunction& psi, double y) {
  double x = std::fmod(pi + y, 2.0 * pi);
  auto j = static_cast<std::size_t>(std::llround(x / psi.grid().dx())) %
           psi.grid().size();
  return std::abs(psi.values()[j]);
}

}  // namespace

TEST_CASE("Ai(0) against the oscillatory-integral oracle") {
  double oracle = airy_integral(0.0);
  CHECK(oracle == doctest::Approx(0.3550280539).epsilon(1e-9));
  CHECK(airy_ai(0.0) == doctest::Approx(oracle).epsilon(1e-10));
}

TEST_CASE("Ai agrees with the Bessel-function identities") {
  for (double z : {-10.5, -6.5, -4.0, -1.0, 0.5, 2.0})
    CHECK(airy_ai(z) == doctest::Approx(airy_bessel(z)).epsilon(1e-8));
  // series cancellation grows toward the seam; asymptotics take over past 6
  for (double z : {-6.01, -5.99, 5.99, 6.01, 5.5})
    CHECK(airy_ai(z) == doctest::Approx(airy_bessel(z)).epsilon(1e-6));
}

TEST_CASE("origin regime carries the printed amplitude") {
  double hbar = 1e-3, c = 0.1;
  cplx v = airy_profile(0.0, 1, c, 0.0, hbar, AiryRegime::Origin);
  double want = std::pow(hbar, -1.0 / 12.0) / std::cbrt(c) * 0.3550280539;
  CHECK(std::abs(v) == doctest::Approx(want).epsilon(1e-9));

  cplx v8 = airy_profile(0.0, 1, c, 0.0, hbar / 8.0, AiryRegime::Origin);
  CHECK(std::abs(v8) / std::abs(v) ==
        doctest::Approx(std::pow(8.0, 1.0 / 12.0)).epsilon(1e-10));
}

TEST_CASE("bulk profile is real when the quartic term vanishes") {
  for (double x : {0.5, 1.0, 2.5, 5.0})
    CHECK(airy_profile(x, 1, 0.1, 0.0, 1e-3, AiryRegime::Bulk).imag() == 0.0);
  CHECK(airy_profile(1.0, 1, 0.1, 0.2, 1e-3, AiryRegime::Bulk).imag() != 0.0);
}

TEST_CASE("profile regime windows are enforced") {
  CHECK_THROWS_AS((void)airy_profile(0.0, 1, 0.1, 0.0, 1e-3, AiryRegime::Bulk),
                  RegimeMismatch);
  CHECK_THROWS_AS((void)airy_profile(6.9, 1, 0.1, 0.0, 1e-3, AiryRegime::Bulk),
                  RegimeMismatch);
  CHECK_THROWS_AS((void)airy_profile(1.0, 1, 0.1, 0.0, 1e-3, AiryRegime::Origin),
                  RegimeMismatch);
  CHECK_THROWS_AS((void)airy_profile(1.0, 1, 0.0, 0.0, 1e-3, AiryRegime::Bulk),
                  ConfigInvalid);
  CHECK_THROWS_AS((void)airy_profile(1.0, 0, 0.1, 0.0, 1e-3, AiryRegime::Bulk),
                  ConfigInvalid);
}

TEST_CASE("bulk profile converges to the exact propagator as hbar shrinks") {
  int s = 1;
  double c = 0.1;
  std::vector<double> lh, le;
  for (double hbar : {1e-3, 3e-4, 1e-4}) {
    auto psi = delocalized_state(hbar, c, s, 0.0);
    std::size_t n = psi.grid().size();
    double dx = psi.grid().dx();
    double sup = 0.0;
    // x = pi lies on the grid (index n/2); compare on exact grid points so
    // no interpolation error enters
    for (std::size_t j = n / 2 + static_cast<std::size_t>(1.0 / dx) + 1;
         j * dx <= pi + 3.0; ++j) {
      double y = static_cast<double>(j - n / 2) * dx;
      cplx want = airy_profile(y, s, c, 0.0, hbar, AiryRegime::Bulk);
      sup = std::max(sup, std::abs(psi.values()[j] - want));
    }
    lh.push_back(std::log(hbar));
    le.push_back(std::log(sup));
  }
  double slope = oracles::fit_slope(lh, le);
  CHECK(slope >= 0.3);
  // absolute quality at the finest hbar: the profile itself is O(1)
  CHECK(le.back() < std::log(0.05));
}

// Relative least-squares residual of |psi(pi+y)| against a free-amplitude
// Airy front |Ai(-y/sigma)| on y in [-0.5, 2.6]*window.
double front_fit_residual(const WaveFunction& psi, double sigma, double window) {
  std::size_t n = psi.grid().size();
  double dx = psi.grid().dx();
  long j0 = static_cast<long>(std::ceil(-0.5 * window / dx));
  long j1 = static_cast<long>(std::floor(2.6 * window / dx));
  double saa = 0.0, sap = 0.0, spp = 0.0;
  for (long j = j0; j <= j1; ++j) {
    double m = std::abs(airy_ai(-static_cast<double>(j) * dx / sigma));
    double p = std::abs(
        psi.values()[static_cast<std::size_t>(static_cast<long>(n / 2) + j)]);
    saa += m * m;
    sap += m * p;
    spp += p * p;
  }
  return std::sqrt(std::max(0.0, spp - sap * sap / saa) / spp);
}

TEST_CASE("front width carries the cube-root scale, fixing the origin exponent") {
  int s = 1;
  double c = 0.1;
  std::vector<double> lh, ls;
  for (double hbar : {1e-3, 3e-4, 1e-4}) {
    auto psi = delocalized_state(hbar, c, s, 0.0);
    double s0 = std::cbrt(6.0 * pi * s * c * hbar);
    double best = s0, best_r = 2.0;
    for (int k = 0; k <= 80; ++k) {
      double sigma = s0 * std::exp(-0.45 + 0.9 * k / 80.0);
      double r = front_fit_residual(psi, sigma, s0);
      if (r < best_r) {
        best_r = r;
        best = sigma;
      }
    }
    CHECK(best_r < 0.15);
    CHECK(std::abs(best / s0 - 1.0) < 0.05);
    // mirrored profile and hbar-free scale both fit far worse
    CHECK(front_fit_residual(psi, -best, s0) > 0.4);
    CHECK(front_fit_residual(psi, std::cbrt(s * c), s0) > 0.3);
    lh.push_back(std::log(hbar));
    ls.push_back(std::log(best));
  }
  double slope = oracles::fit_slope(lh, ls);
  CHECK(slope > 0.28);
  CHECK(slope < 0.39);
}

TEST_CASE("front peak modulus grows like hbar^{-1/12}") {
  std::vector<double> lh, la;
  for (double hbar : {1e-3, 3e-4, 1e-4}) {
    auto psi = delocalized_state(hbar, 0.1, 1, 0.0);
    la.push_back(0.5 * std::log(density_peak(psi).density));
    lh.push_back(std::log(hbar));
  }
  double slope = oracles::fit_slope(lh, la);
  CHECK(slope > -0.12);
  CHECK(slope < -0.05);
}

TEST_CASE("cubic dispersion kills the localization revival") {
  double i3 = ipr(delocalized_state(1e-3, 0.1, 1, 0.0));
  double i4 = ipr(delocalized_state(1e-4, 0.1, 1, 0.0));
  CHECK(i4 / i3 < 1.5);

  double r3 = ipr(delocalized_state(1e-3, 0.0, 1, 0.0));
  double r4 = ipr(delocalized_state(1e-4, 0.0, 1, 0.0));
  double slope = (std::log(r4) - std::log(r3)) / (std::log(1e-4) - std::log(1e-3));
  CHECK(std::abs(slope - (-0.5)) < 0.1);
}

TEST_CASE("squeezed profile carries the printed scalings exactly") {
  double hbar = 1e-3, c = 0.1, eps = 0.3;
  int s = 1;
  // decay length read off two samples one unit apart
  double a1 = std::abs(squeezed_profile(0.5, s, c, eps, hbar));
  double a2 = std::abs(squeezed_profile(1.5, s, c, eps, hbar));
  double len = 1.0 / std::log(a1 / a2);
  CHECK(len == doctest::Approx(s * c * std::pow(hbar, eps)).epsilon(1e-12));

  // amplitude scaling as hbar drops a decade, sampled at fixed x/len so the
  // exponential factors cancel
  double b2 = std::abs(squeezed_profile(0.5 * std::pow(0.1, eps), s, c, eps,
                                        hbar / 10.0));
  CHECK(b2 / a1 == doctest::Approx(std::pow(10.0, eps / 2.0)).epsilon(1e-12));
}

TEST_CASE("squeezed launch: measured decay rate and amplitude of the tail") {
  int s = 1;
  double c = 0.1, eps = 0.3;
  double level_prev = 0.0;
  for (double hbar : {1e-3, 1e-4}) {
    auto psi = delocalized_state(hbar, c, s, eps);
    double dx = psi.grid().dx();
    std::vector<double> ys, lm;
    double prev2 = tail_modulus(psi, 0.3 - 2 * dx);
    double prev1 = tail_modulus(psi, 0.3 - dx);
    for (double y = 0.3; y <= 2.2; y += dx) {
      double cur = tail_modulus(psi, y);
      if (prev1 > prev2 && prev1 > cur) {
        double yc = y - dx;
        ys.push_back(yc);
        lm.push_back(std::log(prev1 * std::pow(yc, 0.25)));
      }
      prev2 = prev1;
      prev1 = cur;
    }
    REQUIRE(ys.size() >= 3);
    double rate = -oracles::fit_slope(ys, lm);
    double want = std::pow(hbar, -eps) / (12.0 * pi * s * c);
    CHECK(std::abs(rate - want) / want < 0.10);

    // y = 0 intercept of the fit recovers the envelope level
    // sqrt(2) pi^{-1/4} (6 pi s c)^{-1/4} hbar^{-eps/4}
    double my = 0.0, ml = 0.0;
    for (std::size_t i = 0; i < ys.size(); ++i) {
      my += ys[i] / static_cast<double>(ys.size());
      ml += lm[i] / static_cast<double>(ys.size());
    }
    double level = std::exp(ml + rate * my);
    double envelope = std::sqrt(2.0) * std::pow(pi, -0.25) *
                      std::pow(6.0 * pi * s * c, -0.25) *
                      std::pow(hbar, -eps / 4.0);
    CHECK(std::abs(level - envelope) / envelope < 0.10);
    if (level_prev > 0.0)
      CHECK(level / level_prev ==
            doctest::Approx(std::pow(10.0, eps / 4.0)).epsilon(0.15));
    level_prev = level;
  }
}
