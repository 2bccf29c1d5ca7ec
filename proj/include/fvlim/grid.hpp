#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace fvlim {

// Uniform 1D grid. Interior cells are indexed 0..n-1 with centers
// x_left + (i + 1/2) dx; ghost cells carry negative indices and n..n+g-1.
struct Grid1D {
  int n = 0;
  double x_left = 0.0;
  double x_right = 1.0;
  int ghosts = 2;

  Grid1D() = default;
  Grid1D(int n_, double xl, double xr, int ghosts_ = 2)
      : n(n_), x_left(xl), x_right(xr), ghosts(ghosts_) {
    if (n <= 0) throw std::invalid_argument("Grid1D: need at least one cell");
    if (!(x_right > x_left)) throw std::invalid_argument("Grid1D: empty domain");
    if (ghosts < 1) throw std::invalid_argument("Grid1D: need at least one ghost layer");
  }

  double dx() const { return (x_right - x_left) / n; }
  double center(int i) const { return x_left + (i + 0.5) * dx(); }
  double left_edge(int i) const { return x_left + i * dx(); }

  bool operator==(const Grid1D&) const = default;
};

// Cell averages on a grid, one or more components per cell, ghost layers
// included. Storage is cell-major.
class CellField {
 public:
  CellField() = default;
  CellField(const Grid1D& grid, int components)
      : grid_(grid),
        comps_(components),
        data_(static_cast<std::size_t>(grid.n + 2 * grid.ghosts) * components, 0.0) {
    if (components < 1) throw std::invalid_argument("CellField: components must be >= 1");
  }

  const Grid1D& grid() const { return grid_; }
  int components() const { return comps_; }

  double& operator()(int cell, int comp = 0) {
    return data_[static_cast<std::size_t>(cell + grid_.ghosts) * comps_ + comp];
  }
  double operator()(int cell, int comp = 0) const {
    return data_[static_cast<std::size_t>(cell + grid_.ghosts) * comps_ + comp];
  }

  bool same_layout(const CellField& other) const {
    return grid_ == other.grid_ && comps_ == other.comps_;
  }
  bool bitwise_equal(const CellField& other) const {
    return same_layout(other) && data_ == other.data_;
  }

  std::vector<double>& raw() { return data_; }
  const std::vector<double>& raw() const { return data_; }

 private:
  Grid1D grid_;
  int comps_ = 1;
  std::vector<double> data_;
};

struct BoundaryCondition {
  enum class Kind { Periodic, Transmissive, Fixed };
  Kind kind = Kind::Periodic;
  std::vector<double> left;   // Fixed: one value per component
  std::vector<double> right;

  static BoundaryCondition periodic() { return {Kind::Periodic, {}, {}}; }
  static BoundaryCondition transmissive() { return {Kind::Transmissive, {}, {}}; }
  static BoundaryCondition fixed(std::vector<double> l, std::vector<double> r) {
    return {Kind::Fixed, std::move(l), std::move(r)};
  }
};

void fill_ghosts(CellField& field, const BoundaryCondition& bc);

}  // namespace fvlim
