#include "sclab/diagnostics.hpp"

#include <cmath>

#include "sclab/errors.hpp"

namespace sclab {

double ipr(const WaveFunction& f) {
  double s = 0.0;
  for (const auto& z : f.values()) {
    double d = std::norm(z);
    s += d * d;
  }
  return s * f.grid().dx();
}

Peak density_peak(const WaveFunction& f) {
  const auto& v = f.values();
  std::size_t n = v.size();
  std::size_t best = 0;
  double bd = -1.0;
  for (std::size_t j = 0; j < n; ++j) {
    double d = std::norm(v[j]);
    if (d > bd) {
      bd = d;
      best = j;
    }
  }
  bool periodic = f.grid().kind() != GridKind::LineSegment;
  double dm, dp;
  if (periodic) {
    dm = std::norm(v[(best + n - 1) % n]);
    dp = std::norm(v[(best + 1) % n]);
  } else {
    if (best == 0 || best == n - 1)
      throw PeakNotFound("density maximum sits on the grid edge");
    dm = std::norm(v[best - 1]);
    dp = std::norm(v[best + 1]);
  }
  double curv = dm - 2.0 * bd + dp;
  if (!(curv < 0.0)) throw PeakNotFound("density has no curvature at its maximum");
  double delta = 0.5 * (dm - dp) / curv;
  Peak p;
  p.x = f.grid().x(best) + delta * f.grid().dx();
  p.density = bd - 0.25 * (dm - dp) * delta;
  return p;
}

double fidelity(const WaveFunction& a, const WaveFunction& b) {
  return std::abs(inner_product(a, b));
}

}  // namespace sclab
