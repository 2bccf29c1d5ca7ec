#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <span>
#include <utility>

#include "fvlim/types.hpp"

namespace fvlim {

// Unlimited third-order reconstruction in slope-ratio form.
inline double phi3(double theta) { return (2.0 + theta) / 3.0; }

// Piecewise-linear approximation of the log-reconstruction limiter.
inline double phi_ct(double theta) {
  const double p3 = phi3(theta);
  return std::max(0.0, std::min(p3, std::max(-0.5 * theta, std::min({2.0 * theta, p3, 1.6}))));
}

// Same, clipped to the strict TVD region (zero for theta < 0).
inline double phi_ct_tvd(double theta) {
  return std::max(0.0, std::min({2.0 * theta, phi3(theta), 1.6}));
}

// Local-double-logarithmic limiter with shape parameter q > 0. Evaluated in
// a reformulation that stays accurate through the removable singularity at
// theta = +-1; tends to phi3 pointwise as q -> 0.
double phi_as(double theta, double q);

// Unlimited third-order reconstruction in the two-slope form, no division.
inline double h3(SlopePair s) { return (2.0 * s.dp + s.dm) / 3.0; }

// Lift a slope-ratio limiter to the two-slope form, H = phi(dm/dp) * dp.
// At dp = 0 every catalogued phi tends to a constant, so H = 0.
template <class Phi>
double h_from_phi(Phi&& phi, SlopePair s) {
  if (s.dp == 0.0) return 0.0;
  return phi(s.dm / s.dp) * s.dp;
}

// Third-order limiter that treats mirrored slope pairs identically.
// sgn(0) = 0, so the value vanishes on the dp = 0 axis.
inline double h3l(SlopePair s) {
  const double sg = sgn(s.dp);
  const double g = h3(s);
  const double inner =
      std::max(-sg * s.dm, std::min({2.0 * sg * s.dm, sg * g, 1.5 * std::abs(s.dp)}));
  return sg * std::max(0.0, std::min(sg * g, inner));
}

// Fixed-radius switch: squared slope magnitude relative to (r*dx)^2.
// Quadratic under slope scaling, hence not scale-free.
inline double eta_ct(SlopePair s, const SmoothnessContext& c) {
  const double rdx = c.radius * c.dx;
  return (s.dm * s.dm + s.dp * s.dp) / (rdx * rdx);
}

// Parameter-free switch: slope magnitude relative to sqrt(5/2)*alpha*dx^2.
// Dimensionless, and invariant when slopes and alpha scale together.
// alpha = 0 means the smooth region is empty; return +inf so callers always
// take the limited branch.
inline double eta(SlopePair s, const SmoothnessContext& c) {
  if (c.alpha <= 0.0) return std::numeric_limits<double>::infinity();
  return std::sqrt(s.dm * s.dm + s.dp * s.dp) / (std::sqrt(2.5) * c.alpha * c.dx * c.dx);
}

// Combined limiters: unlimited reconstruction inside the smooth region,
// limited outside. The switch is sharp by default; with blend enabled the two
// branches are mixed linearly over eta in [1, 1.1].
double h_ct_combined(SlopePair s, const SmoothnessContext& c, bool blend = false);
double h3l_combined(SlopePair s, const SmoothnessContext& c, bool blend = false);

// Largest |u0''| over samples (x, u0''(x)) outside the excluded intervals.
// Returns 0 when nothing remains.
double alpha_from_samples(std::span<const std::pair<double, double>> samples,
                          std::span<const std::pair<double, double>> excluded);

// Sample an analytic second derivative at n uniform points on [x_left, x_right]
// (excluded intervals skipped) and refine the best sample by golden-section
// search, so the returned maximum does not depend on sample placement.
double alpha_from_ic(const std::function<double(double)>& second_derivative, double x_left,
                     double x_right, std::span<const std::pair<double, double>> excluded = {},
                     int n_samples = 10000);

}  // namespace fvlim
