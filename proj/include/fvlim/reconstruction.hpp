#pragma once

#include <vector>

#include "fvlim/grid.hpp"
#include "fvlim/scheme.hpp"

namespace fvlim {

// Reconstructed values at the two faces of one cell: left is u at x_{i-1/2}
// seen from inside the cell, right is u at x_{i+1/2}.
struct InterfacePair {
  double left;
  double right;
};

// right = ubar_i + H(dm, dp)/2, left = ubar_i - H(dp, dm)/2.
inline InterfacePair interface_values(double u_m, double u_i, double u_p,
                                      const LimiterScheme& scheme, double dx) {
  const double dm = u_i - u_m;
  const double dp = u_p - u_i;
  return {u_i - 0.5 * scheme.h(SlopePair(dp, dm), dx), u_i + 0.5 * scheme.h(SlopePair(dm, dp), dx)};
}

// One pair per interior cell; requires at least one ghost layer.
std::vector<InterfacePair> reconstruct_field(const CellField& field, const LimiterScheme& scheme,
                                             int comp = 0);

}  // namespace fvlim
