#pragma once

#include <string>

namespace fvlim {

// Decimal text with 17 significant digits; round-trips doubles bit-exactly.
std::string fmt17(double v);

}  // namespace fvlim
