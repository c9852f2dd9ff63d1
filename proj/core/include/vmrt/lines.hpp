#pragma once

#include <array>
#include <vector>

#include "vmrt/exterior.hpp"
#include "vmrt/matrix.hpp"
#include "vmrt/metabelian.hpp"
#include "vmrt/variety.hpp"

namespace vmrt {

class ZeroDirection : public Error {
 public:
  using Error::Error;
};

/// The w-line x . exp(C w), stored canonically: the direction is scaled so its
/// leftmost nonzero coordinate (the pivot) is 1, and the base is the unique
/// point of the line whose W-part vanishes at the pivot. Two lines are equal
/// exactly when their canonical forms are.
struct HorizontalLine {
  Vec direction;
  GroupElement base;
  std::size_t pivot = 0;

  friend bool operator==(const HorizontalLine&, const HorizontalLine&) = default;
};

/// (x^W + t w, x^U + (t/2) omega(x^W, w)) = x . exp(t w).
GroupElement point_on_line(const OmegaForm& omega, const GroupElement& x, const Vec& w,
                           const Scalar& t);

/// Throws ZeroDirection when w = 0.
HorizontalLine line_through(const OmegaForm& omega, const GroupElement& x, const Vec& w);

/// A point alpha of the family of tangent directions, through the
/// trivialization alpha <-> ([phi(p)], x).
struct TangentDirectionPoint {
  ChartRef chart;
  Vec p;
  GroupElement base;

  Vec direction() const { return chart->lift(p); }

  friend bool operator==(const TangentDirectionPoint& a, const TangentDirectionPoint& b) {
    return a.chart == b.chart && a.p == b.p && a.base == b.base;
  }
};

/// (p, x) -> (p, x . exp(t phi(p))). Orbits are the fibers of rho.
TangentDirectionPoint phi_action(const OmegaForm& omega, const Scalar& t,
                                 const TangentDirectionPoint& alpha);

/// The line through x in direction phi(p).
HorizontalLine rho(const OmegaForm& omega, const TangentDirectionPoint& alpha);

/// Rows (x^W, x^U, 1) and (w, omega(x^W, w)/2, 0) spanning the projective
/// closure of the line inside V = W + U + C.
template <class R>
std::array<std::vector<R>, 2> line_rows(const OmegaForm& omega, const BasicGroupElement<R>& x,
                                        const std::vector<R>& w) {
  std::array<std::vector<R>, 2> rows;
  rows[0] = x.w;
  rows[0].insert(rows[0].end(), x.u.begin(), x.u.end());
  rows[0].push_back(R(Scalar(1)));
  rows[1] = w;
  for (const auto& c : omega.apply<R>(x.w, w)) rows[1].push_back(Scalar(1, 2) * c);
  rows[1].push_back(R(Scalar(0)));
  return rows;
}

/// A 2-plane in V in canonical reduced echelon form with its Plücker vector.
struct PlueckerLine {
  Mat basis;
  Vec pluecker;

  friend bool operator==(const PlueckerLine&, const PlueckerLine&) = default;
};

PlueckerLine plucker_embed(const OmegaForm& omega, const HorizontalLine& line);

/// Intersection of the closed line with the hyperplane at infinity P(W + U):
/// [w : omega(x^W, w)/2], leftmost-normalized.
Vec boundary_point(const OmegaForm& omega, const HorizontalLine& line);

}  // namespace vmrt
