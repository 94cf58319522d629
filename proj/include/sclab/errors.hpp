#pragma once

#include <stdexcept>
#include <string>

namespace sclab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GridMismatch : Error { using Error::Error; };
struct GridTooCoarse : Error { using Error::Error; };
struct NonNormalizedSymbol : Error { using Error::Error; };
struct PhasePrecisionLoss : Error { using Error::Error; };
struct NotCoprime : Error { using Error::Error; };
struct RegimeMismatch : Error { using Error::Error; };
struct EnergyDriftExceeded : Error { using Error::Error; };
struct NotHyperbolic : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };
struct DegenerateDecomposition : Error { using Error::Error; };
struct TruncationWarning : Error { using Error::Error; };
struct QuadratureUnconverged : Error { using Error::Error; };
struct TooManyPaths : Error { using Error::Error; };
struct PeakNotFound : Error { using Error::Error; };
struct SupportTruncated : Error { using Error::Error; };
struct BoundaryMassLeak : Error { using Error::Error; };
struct StepUnconverged : Error { using Error::Error; };
struct DimensionTooLarge : Error { using Error::Error; };
struct UnsupportedSymbolForm : Error { using Error::Error; };
struct ConfigInvalid : Error { using Error::Error; };
struct OverflowGuard : Error { using Error::Error; };

}  // namespace sclab
