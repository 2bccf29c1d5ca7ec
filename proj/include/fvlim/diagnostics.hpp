#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fvlim/grid.hpp"
#include "fvlim/ic.hpp"

namespace fvlim {

// Per-cell averages of f by 5-point Gauss-Legendre quadrature (exact for
// polynomials up to degree 9). Cells containing a split point are integrated
// piecewise, which makes jump initialization exact for piecewise-polynomial
// profiles.
CellField cell_averages(const std::function<double(double)>& f, const Grid1D& grid,
                        std::span<const double> split_points = {});

// Cell averages of an initial condition; Euler profiles are averaged in
// conservative variables.
CellField cell_averages(const InitialCondition& ic, const Grid1D& grid, double gamma = 1.4);

using ErrorRange = std::optional<std::pair<double, double>>;

// L1 = dx * sum |a_i - b_i|, Linf = max |a_i - b_i| over interior cells whose
// centers fall in the range (whole domain when unset).
double l1_error(const CellField& a, const CellField& b, int comp = 0, ErrorRange range = {});
double linf_error(const CellField& a, const CellField& b, int comp = 0, ErrorRange range = {});

// Sum of |u_{i+1} - u_i| over interior cells; periodic adds the wrap term.
double total_variation(const CellField& field, int comp = 0, bool periodic = false);

double total_mass(const CellField& field, int comp = 0);

struct ErrorReport {
  int n_cells = 0;
  double dx = 0.0;
  double l1 = 0.0;
  double linf = 0.0;
  double tv = 0.0;
  double order_l1 = std::numeric_limits<double>::quiet_NaN();
  double order_linf = std::numeric_limits<double>::quiet_NaN();
};

// Fills order_* between consecutive refinements:
// order = log(e_k / e_{k+1}) / log(n_{k+1} / n_k). Requires strictly
// increasing n; zero errors leave the order NaN.
void annotate_orders(std::vector<ErrorReport>& reports);

// A persisted fine-grid solution with provenance. The text format is a
// self-describing header of `key: value` lines followed by one line per cell,
// `x_center value[, value, value]`, all numbers with 17 significant digits.
struct ReferenceSolution {
  std::string scheme;
  int n = 0;
  double t_end = 0.0;
  double gamma = 0.0;
  std::string config_hash;
  double x_left = 0.0;
  double x_right = 0.0;
  int components = 1;
  std::vector<double> values;  // n * components, cell-major

  void save(const std::string& path) const;
  static ReferenceSolution load(const std::string& path);
  static ReferenceSolution load_checked(const std::string& path, const std::string& expected_hash);

  static ReferenceSolution from_field(const CellField& field, std::string scheme, double t_end,
                                      double gamma, std::string config_hash);

  // Exact cell-average coarsening by overlap integration; works for any
  // coarse n not larger than the fine n on the same domain.
  CellField restrict_to(const Grid1D& coarse) const;
};

}  // namespace fvlim
