#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace sclab {

using cplx = std::complex<double>;

// Radix-2 transform with precomputed twiddles and bit-reversal table.
// forward() applies X_k = sum_j x_j exp(-2*pi*i*j*k/n) with no scaling,
// inverse() the conjugate transform scaled by 1/n.  Plans are immutable
// after construction and safe to share across threads.
class Fft {
 public:
  explicit Fft(std::size_t n);

  void forward(cplx* data) const { transform(data, false); }
  void inverse(cplx* data) const;
  std::size_t size() const { return n_; }

  static bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }
  static std::size_t next_pow2(std::size_t n);

 private:
  void transform(cplx* data, bool inv) const;

  std::size_t n_;
  std::vector<std::size_t> rev_;
  std::vector<cplx> w_;
};

// Chirp transform y_k = sum_j x_j exp(-i*alpha*j*k), k = 0..x.size()-1,
// via Bluestein's substitution jk = (j^2 + k^2 - (k-j)^2)/2.  Works for any
// length and any real alpha; chirp exponents are reduced mod 2*pi in
// compensated arithmetic so large j^2*alpha cost no precision.
std::vector<cplx> czt(const std::vector<cplx>& x, double alpha);

}  // namespace sclab
