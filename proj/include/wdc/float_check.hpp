#pragma once

#include <string>
#include <vector>

#include "wdc/configuration.hpp"

namespace wdc {

/// Largest scale-free residual of the claims behind one registered check,
/// re-derived from scratch in double precision.
struct FloatResidual {
  std::string check;
  double residual = 0.0;
};

/// One entry per registered check, in report order. Point discrepancies are
/// divided by the configuration scale (largest coordinate magnitude, at least
/// 1); collinearity is measured as the sine of the angle at the first point;
/// radii compare relatively. Claims made vacuous by a coincidence are skipped,
/// as in the exact verifier.
std::vector<FloatResidual> float_residuals(const WoodDesarguesConfiguration& config);

}  // namespace wdc
