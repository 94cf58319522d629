#include "sclab/dispersion.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "sclab/dd.hpp"
#include "sclab/errors.hpp"

namespace sclab {

DispersionLaw DispersionLaw::polynomial(double k2, double c, double d,
                                        std::vector<double> higher) {
  DispersionLaw law;
  law.coef_ = {0.0, 0.0, 0.5 * k2, c, d};
  law.coef_.insert(law.coef_.end(), higher.begin(), higher.end());
  while (law.coef_.size() > 1 && law.coef_.back() == 0.0) law.coef_.pop_back();
  return law;
}

DispersionLaw DispersionLaw::callable(std::function<double(double)> h) {
  DispersionLaw law;
  law.fn_ = std::move(h);
  return law;
}

double DispersionLaw::operator()(double xi) const {
  if (fn_) return fn_(xi);
  double acc = 0.0;
  for (std::size_t k = coef_.size(); k-- > 0;) acc = acc * xi + coef_[k];
  return acc;
}

double DispersionLaw::reduced_phase(double t, double n, double hbar) const {
  if (fn_) {
    double hv = fn_(n * hbar);
    dd::Dd th = dd::div(dd::two_prod(t, hv), hbar);
    if (std::abs(th.hi) * 0x1p-52 > 1e-6)
      throw PhasePrecisionLoss(
          "callable law: phase too large for double evaluation");
    return dd::mod_two_pi(th);
  }
  dd::Dd xi = dd::two_prod(n, hbar);
  dd::Dd h = dd::from(coef_.back());
  for (std::size_t k = coef_.size() - 1; k-- > 0;)
    h = dd::add(dd::mul(h, xi), coef_[k]);
  dd::Dd th = dd::div(dd::mul(h, t), hbar);
  if (std::abs(th.hi) * 0x1p-104 > 1e-6)
    throw PhasePrecisionLoss("phase exceeds compensated-arithmetic range");
  return dd::mod_two_pi(th);
}

WaveFunction propagate_dispersion(const WaveFunction& f, const DispersionLaw& law,
                                  double t) {
  if (f.grid().kind() != GridKind::Circle)
    throw GridMismatch("dispersion propagation lives on the circle");
  auto c = fourier_side(f);
  std::size_t n = c.size();
  double half = static_cast<double>(n / 2);
  for (std::size_t idx = 0; idx < n; ++idx) {
    double mode = static_cast<double>(idx) - half;
    double r = law.reduced_phase(t, mode, f.hbar());
    c[idx] *= cplx{std::cos(r), -std::sin(r)};
  }
  return from_fourier_side(f.grid(), c, f.hbar());
}

RevivalPrediction fractional_revival(long p, long q, const CoherentStateSpec&,
                                     double hbar) {
  if (q < 1) throw ConfigInvalid("revival denominator must be >= 1");
  if (std::gcd(std::abs(p), q) != 1) throw NotCoprime("p/q must be in lowest terms");

  RevivalPrediction pred;
  pred.time = (static_cast<double>(p) / static_cast<double>(q)) * 2.0 *
              std::numbers::pi / hbar;
  pred.sites.resize(static_cast<std::size_t>(q));
  pred.weights.resize(static_cast<std::size_t>(q));
  for (long j = 0; j < q; ++j) {
    pred.sites[static_cast<std::size_t>(j)] =
        2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(q);
    cplx w{0.0, 0.0};
    for (long k = 0; k < q; ++k) {
      long m = ((j * k - p * k * k) % q + q) % q;
      double ang = 2.0 * std::numbers::pi * static_cast<double>(m) /
                   static_cast<double>(q);
      w += cplx{std::cos(ang), std::sin(ang)};
    }
    pred.weights[static_cast<std::size_t>(j)] = w / static_cast<double>(q);
  }
  double s = 0.0;
  for (const auto& w : pred.weights) s += std::norm(w);
  s = std::sqrt(s);
  for (auto& w : pred.weights) w /= s;
  return pred;
}

WaveFunction revival_superposition(const RevivalPrediction& pred,
                                   const CoherentStateSpec& spec,
                                   const Grid& grid, double hbar) {
  std::vector<cplx> acc(grid.size(), cplx{0.0, 0.0});
  for (std::size_t j = 0; j < pred.sites.size(); ++j) {
    if (std::abs(pred.weights[j]) < 1e-15) continue;
    CoherentStateSpec shifted = spec;
    shifted.q = spec.q + pred.sites[j];
    auto psi = make_coherent_state(shifted, grid, hbar);
    for (std::size_t i = 0; i < acc.size(); ++i)
      acc[i] += pred.weights[j] * psi.values()[i];
  }
  return WaveFunction(grid, std::move(acc), hbar);
}

}  // namespace sclab
