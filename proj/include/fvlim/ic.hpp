#pragma once

#include <functional>
#include <string>
#include <vector>

#include "fvlim/physics.hpp"

namespace fvlim {

// An initial condition with enough analytic structure for exact cell-average
// initialization (breakpoints let the quadrature split at jumps and kinks)
// and for deriving the smoothness constants. For Euler problems value /
// derivative / second_derivative describe the density.
struct InitialCondition {
  std::string name;
  int components = 1;
  double x_left = 0.0;
  double x_right = 1.0;
  std::function<double(double)> value;
  std::function<double(double)> derivative;
  std::function<double(double)> second_derivative;
  std::function<EulerPrimitive(double)> primitive;  // Euler only
  std::vector<double> breakpoints;                  // jump/kink locations
};

namespace ic {

InitialCondition sine();                           // sin(pi x) on [-1, 1]
InitialCondition smooth_bump();                    // cos^8 bump on [0, 1]
InitialCondition square_wave(double shift = 0.0);  // indicator of (-1/2, 1/2) on [-1, 1], plus shift
InitialCondition mixed_features();                 // triangle + modulated oscillation on [0, 1]
InitialCondition sod();                            // shock tube on [-2, 2]
InitialCondition shu_osher();                      // shock / density-wave interaction on [-4.5, 4.5]

InitialCondition by_name(const std::string& name, double shift = 0.0);
std::vector<std::string> names();

}  // namespace ic

// The profile advected by a*t and wrapped periodically into the domain;
// breakpoints move along (the wrap seam is added as a breakpoint).
InitialCondition advected(const InitialCondition& base, double displacement);

}  // namespace fvlim
