#include "sclab/wavefunction.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <stdexcept>

#include "sclab/errors.hpp"

namespace sclab {

WaveFunction::WaveFunction(Grid grid, std::vector<cplx> values, double hbar)
    : grid_(grid), v_(std::move(values)), hbar_(hbar) {
  if (v_.size() != grid_.size())
    throw GridMismatch("value count does not match grid");
  if (!(hbar_ > 0.0)) throw Error("hbar must be positive");
}

double WaveFunction::norm() const {
  double s = 0.0;
  for (const auto& z : v_) s += std::norm(z);
  return std::sqrt(s * grid_.dx());
}

bool WaveFunction::is_normalized() const {
  return std::abs(norm() - 1.0) < 1e-9;
}

WaveFunction WaveFunction::normalized() const {
  double n = norm();
  if (n == 0.0) throw Error("cannot normalize the zero function");
  auto w = v_;
  for (auto& z : w) z /= n;
  return WaveFunction(grid_, std::move(w), hbar_);
}

cplx inner_product(const WaveFunction& f, const WaveFunction& g) {
  if (!(f.grid() == g.grid()) || f.hbar() != g.hbar())
    throw GridMismatch("inner product needs matching grids and hbar");
  cplx s{0.0, 0.0};
  const auto& a = f.values();
  const auto& b = g.values();
  for (std::size_t j = 0; j < a.size(); ++j) s += std::conj(a[j]) * b[j];
  return s * f.grid().dx();
}

std::vector<cplx> fourier_side(const WaveFunction& f) {
  std::size_t n = f.grid().size();
  if (!Fft::is_pow2(n))
    throw GridMismatch("fourier_side needs a power-of-two grid");
  std::vector<cplx> bins = f.values();
  Fft plan(n);
  plan.forward(bins.data());
  std::vector<cplx> c(n);
  double s = 1.0 / static_cast<double>(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t idx = (k + n / 2) % n;  // bin k holds mode n = k (mod N)
    c[idx] = bins[k] * s;
  }
  return c;
}

WaveFunction from_fourier_side(const Grid& grid, const std::vector<cplx>& coeffs,
                               double hbar) {
  std::size_t n = grid.size();
  if (coeffs.size() != n) throw GridMismatch("coefficient count mismatch");
  if (!Fft::is_pow2(n))
    throw GridMismatch("from_fourier_side needs a power-of-two grid");
  std::vector<cplx> bins(n);
  for (std::size_t k = 0; k < n; ++k) bins[k] = coeffs[(k + n / 2) % n];
  Fft plan(n);
  plan.inverse(bins.data());
  for (auto& z : bins) z *= static_cast<double>(n);
  return WaveFunction(grid, std::move(bins), hbar);
}

void write_csv(const WaveFunction& f, const std::string& path) {
  std::FILE* fp = std::fopen(path.c_str(), "w");
  if (!fp) throw Error("cannot open " + path + " for writing");
  const char* kind = "line";
  if (f.grid().kind() == GridKind::Circle) kind = "circle";
  if (f.grid().kind() == GridKind::TorusLattice) kind = "torus";
  std::fprintf(fp, "# kind=%s n=%zu hbar=%.17g x_min=%.17g x_max=%.17g\n", kind,
               f.grid().size(), f.hbar(), f.grid().x_min(), f.grid().x_max());
  std::fprintf(fp, "x,re,im\n");
  for (std::size_t j = 0; j < f.grid().size(); ++j)
    std::fprintf(fp, "%.17g,%.17g,%.17g\n", f.grid().x(j),
                 f.values()[j].real(), f.values()[j].imag());
  std::fclose(fp);
}

WaveFunction read_csv(const std::string& path) {
  std::FILE* fp = std::fopen(path.c_str(), "r");
  if (!fp) throw Error("cannot open " + path);
  char kind[16] = {0};
  std::size_t n = 0;
  double hbar = 0, x_min = 0, x_max = 0;
  if (std::fscanf(fp, "# kind=%15s n=%zu hbar=%lg x_min=%lg x_max=%lg\n", kind,
                  &n, &hbar, &x_min, &x_max) != 5) {
    std::fclose(fp);
    throw Error("malformed wave-function csv header in " + path);
  }
  char colhdr[32] = {0};
  if (!std::fgets(colhdr, sizeof colhdr, fp) ||
      std::strncmp(colhdr, "x,re,im", 7) != 0) {
    std::fclose(fp);
    throw Error("missing x,re,im column header in " + path);
  }
  Grid grid = std::strcmp(kind, "circle") == 0 ? Grid::circle(n)
              : std::strcmp(kind, "torus") == 0
                  ? Grid::torus(n)
                  : Grid::line(x_min, x_max, n);
  std::vector<cplx> v(n);
  for (std::size_t j = 0; j < n; ++j) {
    double x, re, im;
    if (std::fscanf(fp, "%lg,%lg,%lg\n", &x, &re, &im) != 3) {
      std::fclose(fp);
      throw Error("truncated wave-function csv " + path);
    }
    v[j] = {re, im};
  }
  std::fclose(fp);
  return WaveFunction(grid, std::move(v), hbar);
}

}  // namespace sclab
