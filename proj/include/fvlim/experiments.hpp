#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fvlim/solver.hpp"

namespace fvlim {

// Canned experiment configurations with frozen parameters.
RunConfig preset(const std::string& name);
std::vector<std::string> preset_names();

// Canonical serialization of the whole catalog and its FNV-1a checksum;
// tests pin the checksum so silent edits fail loudly.
std::string preset_catalog_canonical();
std::uint64_t preset_catalog_checksum();

struct SweepRow {
  std::string scheme;
  int n = 0;
  double dx = 0.0;
  double l1 = std::numeric_limits<double>::quiet_NaN();
  double linf = std::numeric_limits<double>::quiet_NaN();
  double order_l1 = std::numeric_limits<double>::quiet_NaN();
  double order_linf = std::numeric_limits<double>::quiet_NaN();
  double tv = std::numeric_limits<double>::quiet_NaN();
  std::string status = "ok";  // or the failure description
};

// Exact cell averages of the advected profile at t_end (advection only).
CellField advection_truth(const RunConfig& config, const Grid1D& grid);

// Runs every (scheme, n) pair of the base experiment. Advection runs get
// errors against the exact solution; a per-run failure (e.g. a positivity
// abort) is recorded in its row without stopping the sweep.
std::vector<SweepRow> sweep(const RunConfig& base, const std::vector<LimiterScheme>& schemes,
                            const std::vector<int>& resolutions);

}  // namespace fvlim
