#pragma once

#include <cmath>
#include <stdexcept>

namespace fvlim {

// Undivided differences of neighboring cell averages around cell i:
// dm = ubar_i - ubar_{i-1}, dp = ubar_{i+1} - ubar_i.
struct SlopePair {
  double dm;
  double dp;

  SlopePair(double dm_, double dp_) : dm(dm_), dp(dp_) {
    if (!std::isfinite(dm) || !std::isfinite(dp))
      throw std::invalid_argument("SlopePair: slopes must be finite");
  }
};

// Parameters of the smoothness indicators: alpha is the largest |u0''|
// outside declared discontinuities (solution units / length^2), dx the grid
// spacing, radius the r of the fixed-radius indicator.
struct SmoothnessContext {
  double alpha = 0.0;
  double dx = 1.0;
  double radius = 1.0;

  SmoothnessContext() = default;
  SmoothnessContext(double alpha_, double dx_, double radius_ = 1.0)
      : alpha(alpha_), dx(dx_), radius(radius_) {
    if (!(alpha >= 0.0)) throw std::invalid_argument("SmoothnessContext: alpha must be >= 0");
    if (!(dx > 0.0)) throw std::invalid_argument("SmoothnessContext: dx must be > 0");
    if (!(radius > 0.0)) throw std::invalid_argument("SmoothnessContext: radius must be > 0");
  }
};

inline double sgn(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

}  // namespace fvlim
