#include "hanle/parametric.hpp"

namespace hanle {

std::vector<double> linspace(double lo, double hi, int count) {
  if (count < 2) throw ArgumentError(fmt::format("grid needs at least 2 points (got {})", count));
  if (!(lo < hi)) throw ArgumentError(fmt::format("grid bounds must satisfy min < max (got {}, {})", lo, hi));
  std::vector<double> grid(count);
  const double span = count - 1;
  // Written so that a symmetric range yields an exactly antisymmetric grid.
  for (int i = 0; i < count; ++i) grid[i] = (lo * (span - i) + hi * i) / span;
  return grid;
}

}  // namespace hanle
