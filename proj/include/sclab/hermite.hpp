#pragma once

#include <vector>

namespace sclab {

// Orthonormal Hermite function h_j(eta): the L2-normalized eigenfunctions of
// (eta^2 - d^2/d eta^2)/2, computed by the stable normalized three-term
// recurrence.  j above 200 raises OverflowGuard.
double hermite_function(int j, double eta);

// All levels 0..jmax-1 at once (one recurrence sweep).
std::vector<double> hermite_ladder(int jmax, double eta);

}  // namespace sclab
