#include "fvlim/reconstruction.hpp"

namespace fvlim {

std::vector<InterfacePair> reconstruct_field(const CellField& field, const LimiterScheme& scheme,
                                             int comp) {
  if (field.grid().ghosts < 1)
    throw std::invalid_argument("reconstruct_field: at least one ghost layer required");
  const int n = field.grid().n;
  const double dx = field.grid().dx();
  std::vector<InterfacePair> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i)
    out.push_back(
        interface_values(field(i - 1, comp), field(i, comp), field(i + 1, comp), scheme, dx));
  return out;
}

}  // namespace fvlim
