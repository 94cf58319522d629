#include "sclab/product_mode.hpp"

#include <cmath>

#include "sclab/dd.hpp"
#include "sclab/errors.hpp"
#include "sclab/grid.hpp"

namespace sclab {

ProductModeState product_mode_propagate(const ProductModeState& st,
                                        const ProductHamiltonian& hp,
                                        double t) {
  if (st.c.size() != st.fourier_modes * st.hermite_levels)
    throw GridMismatch("product-mode coefficient count mismatch");

  double peak = 0.0;
  for (const auto& z : st.c) peak = std::max(peak, std::abs(z));
  for (std::size_t ni = 0; ni < st.fourier_modes; ++ni)
    for (std::size_t j = 0; j < st.hermite_levels; ++j) {
      bool boundary = ni == 0 || ni == st.fourier_modes - 1 ||
                      j == st.hermite_levels - 1;
      if (boundary && std::abs(st.c[st.idx(ni, j)]) > 1e-8 * peak)
        throw TruncationWarning("state reaches the edge of the product basis");
    }

  ProductModeState out = st;
  for (std::size_t ni = 0; ni < st.fourier_modes; ++ni) {
    double n = st.mode(ni);
    dd::Dd tau = dd::two_prod(n, st.hbar);
    // tau-only part of H'/hbar: n^2 hbar (b + c tau + d tau^2)
    dd::Dd poly = dd::from(hp.d);
    poly = dd::add(dd::mul(poly, tau), hp.c);
    poly = dd::add(dd::mul(poly, tau), hp.b);
    dd::Dd kin = dd::mul(dd::mul(dd::two_prod(n, n), st.hbar), poly);
    for (std::size_t j = 0; j < st.hermite_levels; ++j) {
      // coupling part: a n (j+1/2) hbar
      dd::Dd cross = dd::mul(
          dd::mul(dd::two_prod(static_cast<double>(j) + 0.5, st.hbar), n), hp.a);
      dd::Dd th = dd::mul(dd::add(kin, cross), t);
      if (std::abs(th.hi) * 0x1p-104 > 1e-6)
        throw PhasePrecisionLoss("product-mode phase exceeds compensated range");
      double r = dd::mod_two_pi(th);
      out.c[st.idx(ni, j)] *= cplx{std::cos(r), -std::sin(r)};
    }
  }
  return out;
}

WaveFunction product_mode_level_profile(const ProductModeState& st,
                                        std::size_t j) {
  if (j >= st.hermite_levels) throw Error("hermite level out of range");
  std::vector<cplx> coeffs(st.fourier_modes);
  for (std::size_t ni = 0; ni < st.fourier_modes; ++ni)
    coeffs[ni] = st.c[st.idx(ni, j)];
  return from_fourier_side(Grid::circle(st.fourier_modes), coeffs, st.hbar);
}

}  // namespace sclab
