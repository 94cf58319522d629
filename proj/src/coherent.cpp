#include "sclab/coherent.hpp"

#include <cmath>
#include <numbers>

#include "sclab/errors.hpp"

namespace sclab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::vector<cplx> periodized_samples(const CoherentStateSpec& spec,
                                     const Grid& grid, double hbar, double w) {
  std::vector<cplx> v(grid.size(), cplx{0.0, 0.0});
  double amp = 1.0 / std::sqrt(w);
  for (std::size_t j = 0; j < grid.size(); ++j) {
    double x = grid.x(j);
    for (int m = -2; m <= 2; ++m) {
      double xm = x + kTwoPi * static_cast<double>(m);
      cplx a = spec.symbol((xm - spec.q) / w);
      if (a == cplx{0.0, 0.0}) continue;
      v[j] += amp * a * std::exp(cplx{0.0, spec.p * xm / hbar});
    }
  }
  return v;
}

}  // namespace

WaveFunction make_coherent_state(const CoherentStateSpec& spec, const Grid& grid,
                                 double hbar) {
  if (!(hbar > 0.0)) throw Error("hbar must be positive");
  if (spec.squeeze_eps < 0.0 || spec.squeeze_eps >= 1.0)
    throw ConfigInvalid("squeeze_eps must lie in [0, 1)");
  if (std::abs(spec.symbol.norm() - 1.0) > 1e-9)
    throw NonNormalizedSymbol("envelope must have unit L2 norm");

  double w = std::pow(hbar, 0.5 * (1.0 - spec.squeeze_eps));
  double kc = spec.p / hbar;          // mode-space center
  double kw = 10.0 / w;               // mode-space half width at 1e-18 decay

  switch (grid.kind()) {
    case GridKind::LineSegment: {
      if (grid.dx() > std::sqrt(hbar) / 8.0)
        throw GridTooCoarse("line grid spacing above sqrt(hbar)/8");
      if (grid.dx() * (std::abs(kc) + 6.0 / w) > std::numbers::pi)
        throw GridTooCoarse("momentum content beyond the Nyquist mode");
      std::vector<cplx> v(grid.size());
      double amp = 1.0 / std::sqrt(w);
      for (std::size_t j = 0; j < grid.size(); ++j) {
        double x = grid.x(j);
        v[j] = amp * spec.symbol((x - spec.q) / w) *
               std::exp(cplx{0.0, spec.p * x / hbar});
      }
      return WaveFunction(grid, std::move(v), hbar).normalized();
    }

    case GridKind::Circle: {
      double nmin = 16.0 / std::sqrt(hbar);
      if (static_cast<double>(grid.size()) < nmin)
        throw GridTooCoarse("circle grid below 16/sqrt(hbar) samples");
      if (std::abs(kc) + kw > 0.5 * static_cast<double>(grid.size()))
        throw GridTooCoarse("momentum content beyond the Nyquist mode");
      if (spec.symbol.is_gaussian()) {
        std::size_t n = grid.size();
        std::vector<cplx> c(n);
        for (std::size_t idx = 0; idx < n; ++idx) {
          double mode = static_cast<double>(idx) - static_cast<double>(n / 2);
          double d = mode - kc;
          c[idx] = std::exp(-0.5 * w * w * d * d) *
                   std::exp(cplx{0.0, -mode * spec.q});
        }
        return from_fourier_side(grid, c, hbar).normalized();
      }
      return WaveFunction(grid, periodized_samples(spec, grid, hbar, w), hbar)
          .normalized();
    }

    case GridKind::TorusLattice: {
      if (std::abs(hbar * static_cast<double>(grid.size()) - kTwoPi) >
          1e-12 * kTwoPi)
        throw GridMismatch("torus lattice needs hbar * N = 2*pi");
      if (spec.symbol.is_gaussian()) {
        long k0 = static_cast<long>(std::floor(kc - kw));
        long k1 = static_cast<long>(std::ceil(kc + kw));
        std::vector<cplx> v(grid.size(), cplx{0.0, 0.0});
        for (long k = k0; k <= k1; ++k) {
          double d = static_cast<double>(k) - kc;
          cplx amp = std::exp(-0.5 * w * w * d * d) *
                     std::exp(cplx{0.0, -static_cast<double>(k) * spec.q});
          for (std::size_t j = 0; j < grid.size(); ++j)
            v[j] += amp * std::exp(cplx{0.0, static_cast<double>(k) * grid.x(j)});
        }
        return WaveFunction(grid, std::move(v), hbar).normalized();
      }
      return WaveFunction(grid, periodized_samples(spec, grid, hbar, w), hbar)
          .normalized();
    }
  }
  throw Error("unreachable grid kind");
}

}  // namespace sclab
