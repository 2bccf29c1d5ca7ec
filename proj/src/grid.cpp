#include "fvlim/grid.hpp"

namespace fvlim {

void fill_ghosts(CellField& field, const BoundaryCondition& bc) {
  const int n = field.grid().n;
  const int g = field.grid().ghosts;
  const int m = field.components();
  switch (bc.kind) {
    case BoundaryCondition::Kind::Periodic:
      for (int k = 1; k <= g; ++k)
        for (int c = 0; c < m; ++c) {
          field(-k, c) = field(n - k, c);
          field(n - 1 + k, c) = field(k - 1, c);
        }
      break;
    case BoundaryCondition::Kind::Transmissive:
      for (int k = 1; k <= g; ++k)
        for (int c = 0; c < m; ++c) {
          field(-k, c) = field(0, c);
          field(n - 1 + k, c) = field(n - 1, c);
        }
      break;
    case BoundaryCondition::Kind::Fixed:
      if (static_cast<int>(bc.left.size()) != m || static_cast<int>(bc.right.size()) != m)
        throw std::invalid_argument("fill_ghosts: fixed-state size does not match components");
      for (int k = 1; k <= g; ++k)
        for (int c = 0; c < m; ++c) {
          field(-k, c) = bc.left[c];
          field(n - 1 + k, c) = bc.right[c];
        }
      break;
  }
}

}  // namespace fvlim
