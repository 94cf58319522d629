#include "sclab/fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sclab/dd.hpp"
#include "sclab/errors.hpp"

namespace sclab {

Fft::Fft(std::size_t n) : n_(n), rev_(n), w_(n / 2) {
  if (!is_pow2(n)) throw GridMismatch("fft size must be a power of two");
  int log2n = 0;
  while ((std::size_t{1} << log2n) < n) ++log2n;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = 0;
    for (int b = 0; b < log2n; ++b) r |= ((i >> b) & 1u) << (log2n - 1 - b);
    rev_[i] = r;
  }
  for (std::size_t k = 0; k < n / 2; ++k) {
    double ang = -2.0 * std::numbers::pi * static_cast<double>(k) /
                 static_cast<double>(n);
    w_[k] = {std::cos(ang), std::sin(ang)};
  }
}

std::size_t Fft::next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

void Fft::transform(cplx* a, bool inv) const {
  for (std::size_t i = 0; i < n_; ++i)
    if (i < rev_[i]) std::swap(a[i], a[rev_[i]]);
  for (std::size_t len = 2; len <= n_; len <<= 1) {
    std::size_t half = len >> 1;
    std::size_t step = n_ / len;
    for (std::size_t i = 0; i < n_; i += len) {
      for (std::size_t j = 0; j < half; ++j) {
        cplx w = w_[j * step];
        if (inv) w = std::conj(w);
        cplx t = w * a[i + j + half];
        a[i + j + half] = a[i + j] - t;
        a[i + j] += t;
      }
    }
  }
}

void Fft::inverse(cplx* data) const {
  transform(data, true);
  double s = 1.0 / static_cast<double>(n_);
  for (std::size_t i = 0; i < n_; ++i) data[i] *= s;
}

std::vector<cplx> czt(const std::vector<cplx>& x, double alpha) {
  std::size_t m = x.size();
  if (m == 0) return {};
  if (m == 1) return x;

  auto chirp = [alpha](std::size_t j, double sign) {
    dd::Dd e = dd::mul(dd::two_prod(static_cast<double>(j),
                                    static_cast<double>(j)),
                       sign * alpha * 0.5);
    double th = dd::mod_two_pi(e);
    return cplx{std::cos(th), std::sin(th)};
  };

  std::size_t L = Fft::next_pow2(2 * m - 1);
  Fft plan(L);
  std::vector<cplx> a(L, cplx{0.0, 0.0});
  std::vector<cplx> b(L, cplx{0.0, 0.0});
  for (std::size_t j = 0; j < m; ++j) a[j] = x[j] * chirp(j, -1.0);
  for (std::size_t j = 0; j < m; ++j) {
    cplx c = chirp(j, +1.0);
    b[j] = c;
    if (j > 0) b[L - j] = c;
  }
  plan.forward(a.data());
  plan.forward(b.data());
  for (std::size_t i = 0; i < L; ++i) a[i] *= b[i];
  plan.inverse(a.data());

  std::vector<cplx> y(m);
  for (std::size_t k = 0; k < m; ++k) y[k] = a[k] * chirp(k, -1.0);
  return y;
}

}  // namespace sclab
