#include "sclab/hermite.hpp"

#include <cmath>
#include <numbers>

#include "sclab/errors.hpp"

namespace sclab {

std::vector<double> hermite_ladder(int jmax, double eta) {
  if (jmax < 1) throw Error("hermite ladder needs at least one level");
  if (jmax - 1 > 200)
    throw OverflowGuard("hermite recurrence validated only up to j = 200");
  std::vector<double> h(static_cast<std::size_t>(jmax));
  h[0] = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * eta * eta);
  if (jmax == 1) return h;
  h[1] = eta * std::sqrt(2.0) * h[0];
  for (int j = 1; j + 1 < jmax; ++j) {
    double jd = static_cast<double>(j);
    h[static_cast<std::size_t>(j + 1)] =
        eta * std::sqrt(2.0 / (jd + 1.0)) * h[static_cast<std::size_t>(j)] -
        std::sqrt(jd / (jd + 1.0)) * h[static_cast<std::size_t>(j - 1)];
  }
  return h;
}

double hermite_function(int j, double eta) {
  if (j < 0) throw Error("hermite level must be nonnegative");
  return hermite_ladder(j + 1, eta)[static_cast<std::size_t>(j)];
}

}  // namespace sclab
