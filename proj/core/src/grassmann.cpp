#include "vmrt/grassmann.hpp"

namespace vmrt {

GrassmannChart::GrassmannChart(std::size_t dim_v, std::size_t pivot_a, std::size_t pivot_b)
    : dim_v_(dim_v), a_(pivot_a), b_(pivot_b) {
  if (!(pivot_a < pivot_b && pivot_b < dim_v)) throw Error("Grassmann chart needs pivots a < b < dim V");
}

GrassmannChart GrassmannChart::primary_for(const PlueckerLine& plane) {
  const RowEchelon ech = row_reduce(plane.basis);
  if (ech.pivots.size() != 2) throw Error("Grassmann chart of a degenerate plane");
  return GrassmannChart(plane.basis.cols(), ech.pivots[0], ech.pivots[1]);
}

std::optional<GrassmannChart> GrassmannChart::secondary_for(const PlueckerLine& plane) {
  const GrassmannChart primary = primary_for(plane);
  const std::size_t n = plane.basis.cols();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (i == primary.a_ && j == primary.b_) continue;
      if (plane.pluecker[pair_index(i, j, n)] != 0) return GrassmannChart(n, i, j);
    }
  return std::nullopt;
}

}  // namespace vmrt
