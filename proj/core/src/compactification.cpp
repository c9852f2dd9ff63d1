#include "vmrt/compactification.hpp"

namespace vmrt {

GroupElement canonical_coset(const OmegaForm& omega, const Mat& frame, const GroupElement& x) {
  require_same_size(frame.rows(), omega.dim_w(), "coset frame");
  const RowEchelon ech = row_reduce(frame.transposed());
  Vec shift = zeros(omega.dim_w());
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
    const Scalar& xp = x.w[ech.pivots[r]];
    if (xp == 0) continue;
    shift = shift - xp * ech.reduced.row(r);
  }
  return multiply(omega, x, GroupElement{shift, zeros(omega.dim_u())});
}

bool in_same_coset(const OmegaForm& omega, const Mat& frame, const GroupElement& x,
                   const GroupElement& y) {
  const GroupElement rel = multiply(omega, inverse(x), y);
  return is_zero(rel.u) && solve_in_span(frame, rel.w).in_span();
}

BoundaryPoint make_boundary_point(const OmegaForm& omega, const ChartRef& chart, const Vec& p,
                                  const GroupElement& x) {
  BoundaryPoint b;
  b.chart = chart;
  b.p = p;
  b.s = chart->lift(p);
  normalize_leftmost(b.s);
  b.coset = canonical_coset(omega, frame_matrix(*chart, p), x);
  return b;
}

XPoint mu_hat(const OmegaForm& omega, const PBundlePoint& point) {
  if (const auto* off = std::get_if<OffSection>(&point)) return Interior{off->alpha.base};
  const auto& on = std::get<OnSection>(point);
  const auto p = on.chart->locate(on.line.direction);
  if (!p) {
    throw DirectionNotOnChart("direction " + to_string(on.line.direction) + " is not on chart '" +
                              on.chart->label() + "'");
  }
  return make_boundary_point(omega, on.chart, *p, on.line.base);
}

CompactifiedLine compactified_line(const OmegaForm& omega, const ChartRef& chart, const Vec& p,
                                   const GroupElement& x, const std::vector<Scalar>& t_grid) {
  const Vec w = chart->lift(p);
  std::vector<XPoint> interior;
  interior.reserve(t_grid.size());
  for (const auto& t : t_grid) interior.emplace_back(Interior{point_on_line(omega, x, w, t)});
  const HorizontalLine line = line_through(omega, x, w);
  return {std::move(interior), mu_hat(omega, OnSection{chart, line})};
}

XPoint g_action(const OmegaForm& omega, const GroupElement& g, const XPoint& point) {
  if (const auto* in = std::get_if<Interior>(&point)) return Interior{multiply(omega, g, in->x)};
  const auto& b = std::get<BoundaryPoint>(point);
  BoundaryPoint out = b;
  out.coset = canonical_coset(omega, frame_matrix(*b.chart, b.p), multiply(omega, g, b.coset));
  return out;
}

PBundlePoint g_action(const OmegaForm& omega, const GroupElement& g, const PBundlePoint& point) {
  if (const auto* off = std::get_if<OffSection>(&point)) {
    OffSection out = *off;
    out.alpha.base = multiply(omega, g, off->alpha.base);
    return out;
  }
  const auto& on = std::get<OnSection>(point);
  return OnSection{on.chart, line_through(omega, multiply(omega, g, on.line.base), on.line.direction)};
}

}  // namespace vmrt
