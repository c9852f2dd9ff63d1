#pragma once

#include <variant>
#include <vector>

#include "vmrt/lines.hpp"
#include "vmrt/metabelian.hpp"
#include "vmrt/variety.hpp"

namespace vmrt {

class DirectionNotOnChart : public Error {
 public:
  using Error::Error;
};

/// Canonical representative of the coset x . T_s, T_s = exp(T_s S+): the W-part
/// vanishes on the pivot coordinates of the reduced echelon form of the frame.
/// `frame` holds the affine tangent frame as columns. Requires T_s S+ to be
/// omega-isotropic so that T_s is a subgroup.
GroupElement canonical_coset(const OmegaForm& omega, const Mat& frame, const GroupElement& x);

/// x^-1 y in T_s, decided directly from the group law: the W-part of x^-1 y lies
/// in the frame span and its U-part vanishes.
bool in_same_coset(const OmegaForm& omega, const Mat& frame, const GroupElement& x,
                   const GroupElement& y);

/// A point (s, x . T_s) of the boundary J.
struct BoundaryPoint {
  ChartRef chart;
  Vec p;              // chart point with s = [phi(p)]
  Vec s;              // phi(p), leftmost-normalized
  GroupElement coset; // canonical representative

  friend bool operator==(const BoundaryPoint& a, const BoundaryPoint& b) {
    return a.s == b.s && a.coset == b.coset;
  }
};

BoundaryPoint make_boundary_point(const OmegaForm& omega, const ChartRef& chart, const Vec& p,
                                  const GroupElement& x);

struct Interior {
  GroupElement x;
  friend bool operator==(const Interior&, const Interior&) = default;
};

/// X = G disjoint-union J.
using XPoint = std::variant<Interior, BoundaryPoint>;

inline bool is_boundary(const XPoint& pt) { return std::holds_alternative<BoundaryPoint>(pt); }

/// A point of the P^1-bundle over the line family: off the distinguished
/// section it is a tangent direction alpha; on it, it is sigma(l).
struct OffSection {
  TangentDirectionPoint alpha;
  friend bool operator==(const OffSection&, const OffSection&) = default;
};

struct OnSection {
  ChartRef chart;
  HorizontalLine line;
  friend bool operator==(const OnSection& a, const OnSection& b) {
    return a.chart == b.chart && a.line == b.line;
  }
};

using PBundlePoint = std::variant<OffSection, OnSection>;

/// OffSection(p, x) -> Interior(x); OnSection(l^w_x) -> Boundary([w], x . T_[w]).
/// Throws DirectionNotOnChart when w is not phi(p) up to scale for a chart point.
XPoint mu_hat(const OmegaForm& omega, const PBundlePoint& point);

struct CompactifiedLine {
  std::vector<XPoint> interior;
  XPoint at_infinity;
};

/// Interior points x . exp(t phi(p)) for each t in the grid, plus the boundary
/// point of the line.
CompactifiedLine compactified_line(const OmegaForm& omega, const ChartRef& chart, const Vec& p,
                                   const GroupElement& x, const std::vector<Scalar>& t_grid);

/// Left action of G on X: Interior(x) -> Interior(g x), and
/// Boundary(s, x T_s) -> Boundary(s, g x T_s).
XPoint g_action(const OmegaForm& omega, const GroupElement& g, const XPoint& point);
/// Left translation of lines and directions.
PBundlePoint g_action(const OmegaForm& omega, const GroupElement& g, const PBundlePoint& point);

}  // namespace vmrt
