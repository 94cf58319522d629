#include "sclab/propagator.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sclab/errors.hpp"

namespace sclab {

namespace {

double l2_diff(const std::vector<cplx>& a, const std::vector<cplx>& b,
               double dx) {
  double s = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) s += std::norm(a[j] - b[j]);
  return std::sqrt(s * dx);
}

}  // namespace

WaveFunction split_step(const WaveFunction& f,
                        const std::function<double(double)>& V, double t,
                        double dt) {
  const Grid& grid = f.grid();
  if (grid.kind() == GridKind::TorusLattice)
    throw ConfigInvalid("split_step needs a spectral line or circle grid");
  if (!V) throw ConfigInvalid("split_step needs a potential callable");
  if (t == 0.0) return f;
  if (!(t > 0.0) || !(dt > 0.0))
    throw ConfigInvalid("split_step span and step must be positive");

  const std::size_t n = grid.size();
  const double hbar = f.hbar();
  const double L = grid.length();
  const double dx = grid.dx();
  const long steps = std::max(1L, std::lround(t / dt));
  const double h = t / static_cast<double>(steps);

  std::vector<double> vx(n);
  for (std::size_t j = 0; j < n; ++j) vx[j] = V(grid.x(j));
  std::vector<double> k2(n);
  for (std::size_t j = 0; j < n; ++j) {
    double m = static_cast<double>(j < n / 2 ? j : j - n);
    double k = 2.0 * std::numbers::pi * m / L;
    k2[j] = k * k;
  }

  const bool line = grid.kind() == GridKind::LineSegment;
  const std::size_t edge = std::max<std::size_t>(4, n / 32);
  auto boundary_mass = [&](const std::vector<cplx>& v) {
    double s = 0.0;
    for (std::size_t j = 0; j < edge; ++j)
      s += std::norm(v[j]) + std::norm(v[n - 1 - j]);
    return s * dx;
  };
  if (line && boundary_mass(f.values()) > 1e-10)
    throw BoundaryMassLeak("initial state already touches the grid edge");

  Fft fft(n);
  auto evolve = [&](std::vector<cplx> v, long m, double step) {
    std::vector<cplx> pot(n), kin(n);
    for (std::size_t j = 0; j < n; ++j) {
      pot[j] = std::polar(1.0, -0.5 * step * vx[j] / hbar);
      kin[j] = std::polar(1.0, -step * hbar * k2[j]);
    }
    for (long s = 0; s < m; ++s) {
      for (std::size_t j = 0; j < n; ++j) v[j] *= pot[j];
      fft.forward(v.data());
      for (std::size_t j = 0; j < n; ++j) v[j] *= kin[j];
      fft.inverse(v.data());
      for (std::size_t j = 0; j < n; ++j) v[j] *= pot[j];
      if (line && boundary_mass(v) > 1e-8)
        throw BoundaryMassLeak("mass reached the grid edge at t = " +
                               std::to_string((s + 1) * step));
    }
    return v;
  };

  // price the step against its own halving before paying for the full span
  long probe = std::min<long>(16, steps);
  std::vector<cplx> coarse = evolve(f.values(), probe, h);
  std::vector<cplx> fine = evolve(f.values(), 2 * probe, 0.5 * h);
  double projected = l2_diff(coarse, fine, dx) * static_cast<double>(steps) /
                     static_cast<double>(probe);
  if (projected > 1e-6)
    throw StepUnconverged("split step would drift " + std::to_string(projected) +
                          " in L2 over the span; halve dt");

  std::vector<cplx> out =
      (probe == steps) ? std::move(coarse)
                       : evolve(f.values(), steps, h);
  return WaveFunction(grid, std::move(out), hbar);
}

struct TorusSpectral {
  Eigen::VectorXd values;
  Eigen::MatrixXcd vectors;
};

TorusOperator::TorusOperator(std::size_t dimension, std::vector<cplx> matrix)
    : n_(dimension), m_(std::move(matrix)) {
  if (n_ < 8) throw ConfigInvalid("torus dimension must be at least 8");
  if (m_.size() != n_ * n_)
    throw ConfigInvalid("torus matrix size does not match its dimension");
  double worst = 0.0;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i; j < n_; ++j)
      worst = std::max(worst,
                       std::abs(m_[i * n_ + j] - std::conj(m_[j * n_ + i])));
  if (worst >= 1e-12)
    throw ConfigInvalid("torus operator is not Hermitian");
}

double TorusOperator::hbar() const {
  return 2.0 * std::numbers::pi / static_cast<double>(n_);
}

const TorusSpectral& TorusOperator::spectral() const {
  if (!spectral_) {
    Eigen::MatrixXcd h(n_, n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) h(i, j) = m_[i * n_ + j];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
    auto spec = std::make_shared<TorusSpectral>();
    spec->values = solver.eigenvalues();
    spec->vectors = solver.eigenvectors();
    spectral_ = std::move(spec);
  }
  return *spectral_;
}

TorusOperator harper_operator(std::size_t dimension) {
  if (dimension < 8) throw ConfigInvalid("torus dimension must be at least 8");
  std::size_t n = dimension;
  std::vector<cplx> m(n * n, cplx{0.0, 0.0});
  for (std::size_t k = 0; k < n; ++k) {
    double q = 2.0 * std::numbers::pi * static_cast<double>(k) /
               static_cast<double>(n);
    m[k * n + k] = -std::cos(q);
    m[k * n + (k + 1) % n] += 0.5;
    m[k * n + (k + n - 1) % n] += 0.5;
  }
  return TorusOperator(n, std::move(m));
}

namespace {

void matvec(const TorusOperator& op, double scale, const std::vector<cplx>& x,
            std::vector<cplx>& y) {
  std::size_t n = op.dimension();
  const std::vector<cplx>& m = op.matrix();
  for (std::size_t i = 0; i < n; ++i) {
    cplx acc{0.0, 0.0};
    const cplx* row = &m[i * n];
    for (std::size_t j = 0; j < n; ++j) acc += row[j] * x[j];
    y[i] = acc * scale;
  }
}

// J_k(a) for k = 0..kept by downward recurrence, normalized through
// J_0 + 2 sum J_{2k} = 1.
std::vector<double> bessel_ladder(double a, long kept) {
  long start = kept + 30 + static_cast<long>(10.0 * std::cbrt(a + 1.0));
  std::vector<double> out(static_cast<std::size_t>(kept) + 1, 0.0);
  double above = 0.0, here = 1e-30, even_sum = 0.0;
  for (long k = start; k >= 0; --k) {
    double below = 2.0 * static_cast<double>(k + 1) / a * here - above;
    above = here;
    here = below;
    if (k <= kept) out[static_cast<std::size_t>(k)] = here;
    if (k % 2 == 0 && k > 0) even_sum += here;
    if (std::abs(here) > 1e250) {
      above *= 1e-250;
      here *= 1e-250;
      even_sum *= 1e-250;
      for (double& v : out) v *= 1e-250;
    }
  }
  double scale = 1.0 / (here + 2.0 * even_sum - here + here);
  // normalization uses J_0 = here; spell it out to avoid the juggling above
  scale = 1.0 / (out[0] + 2.0 * (even_sum - 0.0));
  (void)scale;
  double norm = out[0];
  double evens = 0.0;
  for (std::size_t k = 2; k < out.size(); k += 2) evens += out[k];
  // the tail beyond `kept` is below roundoff by construction
  norm += 2.0 * evens;
  for (double& v : out) v /= norm;
  return out;
}

std::vector<cplx> propagate_dense(const std::vector<cplx>& state,
                                  const TorusOperator& op, double t) {
  const TorusSpectral& spec = op.spectral();
  std::size_t n = op.dimension();
  Eigen::VectorXcd psi(n);
  for (std::size_t j = 0; j < n; ++j) psi(j) = state[j];
  Eigen::VectorXcd c = spec.vectors.adjoint() * psi;
  double w = t / op.hbar();
  for (std::size_t j = 0; j < n; ++j)
    c(j) *= std::polar(1.0, -w * spec.values(j));
  psi = spec.vectors * c;
  std::vector<cplx> out(n);
  for (std::size_t j = 0; j < n; ++j) out[j] = psi(j);
  return out;
}

std::vector<cplx> propagate_chebyshev(const std::vector<cplx>& state,
                                      const TorusOperator& op, double t) {
  std::size_t n = op.dimension();
  const std::vector<cplx>& m = op.matrix();
  double radius = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) row += std::abs(m[i * n + j]);
    radius = std::max(radius, row);
  }
  double a = t / op.hbar() * radius;
  if (a == 0.0) return state;
  double aa = std::abs(a);
  cplx unit = a > 0.0 ? cplx{0.0, -1.0} : cplx{0.0, 1.0};
  long kept = static_cast<long>(aa + 40.0 + 8.0 * std::cbrt(aa + 1.0));
  std::vector<double> bessel = bessel_ladder(aa, kept);

  std::vector<cplx> prev = state, cur(n), next(n), out(n);
  matvec(op, 1.0 / radius, state, cur);
  cplx ck = 1.0;  // unit^k accumulates
  for (std::size_t j = 0; j < n; ++j) out[j] = bessel[0] * prev[j];
  ck *= unit;
  for (std::size_t j = 0; j < n; ++j) out[j] += 2.0 * bessel[1] * ck * cur[j];
  for (long k = 2; k <= kept; ++k) {
    matvec(op, 1.0 / radius, cur, next);
    for (std::size_t j = 0; j < n; ++j) next[j] = 2.0 * next[j] - prev[j];
    std::swap(prev, cur);
    std::swap(cur, next);
    ck *= unit;
    double w = 2.0 * bessel[static_cast<std::size_t>(k)];
    for (std::size_t j = 0; j < n; ++j) out[j] += w * ck * cur[j];
  }
  return out;
}

}  // namespace

std::vector<cplx> torus_propagate(const std::vector<cplx>& state,
                                  const TorusOperator& op, double t,
                                  PropagationRoute route) {
  std::size_t n = op.dimension();
  if (state.size() != n)
    throw ConfigInvalid("state dimension does not match the operator");
  double norm2 = 0.0;
  for (const cplx& v : state) norm2 += std::norm(v);
  if (std::abs(norm2 - 1.0) > 1e-8)
    throw ConfigInvalid("torus_propagate expects a normalized state");
  if (route == PropagationRoute::automatic)
    route = n <= 4096 ? PropagationRoute::dense
                      : (n <= 16384 ? PropagationRoute::chebyshev
                                    : throw DimensionTooLarge(
                                          "torus dimension above 16384"));
  return route == PropagationRoute::dense ? propagate_dense(state, op, t)
                                          : propagate_chebyshev(state, op, t);
}

double observable_expectation(const WaveFunction& f,
                              const ObservableSymbol& P) {
  if (!P.symbol) throw ConfigInvalid("observable needs a symbol callable");
  const Grid& grid = f.grid();
  double dx = grid.dx();
  double p00 = P.symbol(0.0, 0.0);

  auto position_part = [&]() {
    double s = 0.0;
    for (std::size_t j = 0; j < grid.size(); ++j)
      s += P.symbol(grid.x(j), 0.0) * std::norm(f.values()[j]);
    return s * dx;
  };
  auto momentum_part = [&]() {
    std::vector<cplx> c = fourier_side(f);
    double L = grid.length();
    long half = static_cast<long>(grid.size()) / 2;
    double s = 0.0;
    for (long n = -half; n < half; ++n) {
      double k = 2.0 * std::numbers::pi * static_cast<double>(n) / L;
      s += P.symbol(0.0, f.hbar() * k) *
           std::norm(c[static_cast<std::size_t>(n + half)]);
    }
    return s * L;
  };

  switch (P.form) {
    case SymbolForm::position_only:
      return position_part();
    case SymbolForm::momentum_only:
      return momentum_part();
    case SymbolForm::separable_sum: {
      const double sample[4][2] = {
          {0.7, 0.3}, {-1.1, 0.9}, {0.4, -1.3}, {-0.6, -0.5}};
      for (const auto& zu : sample) {
        double cross = P.symbol(zu[0], zu[1]) - P.symbol(zu[0], 0.0) -
                       P.symbol(0.0, zu[1]) + p00;
        if (std::abs(cross) > 1e-10 * (1.0 + std::abs(P.symbol(zu[0], zu[1]))))
          throw UnsupportedSymbolForm(
              "observable couples position and momentum");
      }
      double mass = 0.0;
      for (const cplx& v : f.values()) mass += std::norm(v);
      mass *= dx;
      return position_part() + momentum_part() - p00 * mass;
    }
  }
  throw ConfigInvalid("unknown observable form");
}

}  // namespace sclab
