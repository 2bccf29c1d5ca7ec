#include "fvlim/physics.hpp"

#include <cstdio>

namespace fvlim {

std::string PositivityError::format(const std::string& variable, double value, int cell,
                                    long long step, double time) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), "nonpositive %s (%.17g) at cell %d, step %lld, t=%.17g",
                variable.c_str(), value, cell, step, time);
  return buf;
}

}  // namespace fvlim
