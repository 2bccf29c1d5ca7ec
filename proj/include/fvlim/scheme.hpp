#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <string_view>

#include "fvlim/limiters.hpp"
#include "fvlim/types.hpp"
#include "fvlim/weno3.hpp"

namespace fvlim {

enum class LimiterKind {
  H3,           // unlimited third order
  CT,           // piecewise-linear limiter with negative lobe
  CTTVD,        // strictly TVD variant
  CTCombined,   // CT with fixed-radius smooth region
  AS,           // log-reconstruction limiter, parameter q
  H3L,          // mirror-symmetric third-order limiter
  H3LCombined,  // H3L with the parameter-free smooth region
  WenoJS,       // fixed epsilon
  WenoYC,       // whole-stencil weights, epsilon = C dx^2
  WenoPow,      // same weights, epsilon = K dx^q
  UserPhi,      // arbitrary slope-ratio limiter
};

// How the regularization epsilon of a WENO scheme depends on the grid.
struct EpsilonPolicy {
  enum class Kind { Fixed, ScaleDx2, PowerLaw };
  Kind kind = Kind::Fixed;
  double value = 1e-6;  // Fixed: epsilon itself; ScaleDx2: the coefficient C; PowerLaw: K
  double exponent = 2.0;

  double resolve(double dx) const {
    switch (kind) {
      case Kind::Fixed: return value;
      case Kind::ScaleDx2: return value * dx * dx;
      case Kind::PowerLaw: return value * std::pow(dx, exponent);
    }
    return value;
  }
};

// A named, fully configured reconstruction rule mapping a SlopePair to the
// limited slope H. Parameters left as NaN (alpha, the ScaleDx2 coefficient)
// are derived from the initial condition when a run is prepared.
struct LimiterScheme {
  LimiterKind kind = LimiterKind::H3;
  double as_q = 1.4;
  double ct_radius = 1.0;
  double alpha = std::numeric_limits<double>::quiet_NaN();
  bool blend = false;
  WenoParams weno;
  EpsilonPolicy eps;
  std::function<double(double)> user_phi;

  double h(SlopePair s, double dx) const;

  bool is_weno() const {
    return kind == LimiterKind::WenoJS || kind == LimiterKind::WenoYC ||
           kind == LimiterKind::WenoPow;
  }
  bool needs_alpha() const { return kind == LimiterKind::H3LCombined; }
  bool needs_epsilon_coefficient() const {
    return kind == LimiterKind::WenoYC && std::isnan(eps.value);
  }

  // Parses the catalog names: h3, ct, ct-tvd, ct-c[:r=..], as[:q=..],
  // h3l, h3l-c[:alpha=..,blend=..], weno-js[:eps=..,p=..],
  // weno-yc[:eps=..], weno-pow[:K=..,q=..].
  static LimiterScheme parse(std::string_view text);

  std::string name() const;       // short display name
  std::string canonical() const;  // full-precision serialization
};

double scheme_h(const LimiterScheme& scheme, SlopePair s, double dx);

inline double LimiterScheme::h(SlopePair s, double dx) const { return scheme_h(*this, s, dx); }

}  // namespace fvlim
