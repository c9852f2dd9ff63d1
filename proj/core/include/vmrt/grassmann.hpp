#pragma once

#include <array>
#include <optional>
#include <vector>

#include "vmrt/errors.hpp"
#include "vmrt/jet.hpp"
#include "vmrt/lines.hpp"

namespace vmrt {

class ChartMiss : public Error {
 public:
  using Error::Error;
};

inline const Scalar& value_of(const Scalar& s) { return s; }
inline const Scalar& value_of(const Jet1& j) { return j.value(); }

/// Affine chart of Gr(2, V) around planes whose 2x2 minor on the pivot
/// columns (a, b) is invertible. Coordinates are the non-pivot entries of the
/// unique basis that is the identity on the pivot columns, read row by row.
class GrassmannChart {
 public:
  GrassmannChart(std::size_t dim_v, std::size_t pivot_a, std::size_t pivot_b);

  /// Chart given by the echelon pivots of the plane.
  static GrassmannChart primary_for(const PlueckerLine& plane);
  /// First pivot pair (lexicographic) other than the primary one with a
  /// nonzero Plücker coordinate, if any.
  static std::optional<GrassmannChart> secondary_for(const PlueckerLine& plane);

  std::size_t dim_v() const { return dim_v_; }
  std::size_t pivot_a() const { return a_; }
  std::size_t pivot_b() const { return b_; }
  std::size_t coordinate_count() const { return 2 * (dim_v_ - 2); }

  /// Throws ChartMiss when the pivot minor vanishes.
  template <class R>
  std::vector<R> coordinates(const std::array<std::vector<R>, 2>& rows) const;

  friend bool operator==(const GrassmannChart&, const GrassmannChart&) = default;

 private:
  std::size_t dim_v_;
  std::size_t a_;
  std::size_t b_;
};

template <class R>
std::vector<R> GrassmannChart::coordinates(const std::array<std::vector<R>, 2>& rows) const {
  require_same_size(rows[0].size(), dim_v_, "Grassmann chart row");
  require_same_size(rows[1].size(), dim_v_, "Grassmann chart row");
  const R& r0a = rows[0][a_];
  const R& r0b = rows[0][b_];
  const R& r1a = rows[1][a_];
  const R& r1b = rows[1][b_];
  const R det = r0a * r1b - r0b * r1a;
  if (value_of(det) == 0) throw ChartMiss("plane leaves the Grassmann chart");
  std::vector<R> out;
  out.reserve(coordinate_count());
  // Normalized rows: n0 = (r1b r0 - r0b r1)/det, n1 = (r0a r1 - r1a r0)/det.
  for (std::size_t c = 0; c < dim_v_; ++c) {
    if (c == a_ || c == b_) continue;
    const R num = r1b * rows[0][c] - r0b * rows[1][c];
    out.push_back(num / det);
  }
  for (std::size_t c = 0; c < dim_v_; ++c) {
    if (c == a_ || c == b_) continue;
    const R num = r0a * rows[1][c] - r1a * rows[0][c];
    out.push_back(num / det);
  }
  return out;
}

}  // namespace vmrt
