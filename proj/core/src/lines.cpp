#include "vmrt/lines.hpp"

namespace vmrt {

GroupElement point_on_line(const OmegaForm& omega, const GroupElement& x, const Vec& w,
                           const Scalar& t) {
  return multiply(omega, x, exp_w(omega, t, w));
}

HorizontalLine line_through(const OmegaForm& omega, const GroupElement& x, const Vec& w) {
  require_same_size(w.size(), omega.dim_w(), "line direction");
  HorizontalLine line;
  line.direction = w;
  line.pivot = normalize_leftmost(line.direction);
  if (line.pivot == w.size()) throw ZeroDirection("horizontal line needs a nonzero direction");
  // Slide along the line until the W-part vanishes at the pivot.
  const Scalar t = -x.w.at(line.pivot);
  line.base = point_on_line(omega, x, line.direction, t);
  return line;
}

TangentDirectionPoint phi_action(const OmegaForm& omega, const Scalar& t,
                                 const TangentDirectionPoint& alpha) {
  TangentDirectionPoint out = alpha;
  out.base = point_on_line(omega, alpha.base, alpha.direction(), t);
  return out;
}

HorizontalLine rho(const OmegaForm& omega, const TangentDirectionPoint& alpha) {
  return line_through(omega, alpha.base, alpha.direction());
}

PlueckerLine plucker_embed(const OmegaForm& omega, const HorizontalLine& line) {
  const auto rows = line_rows<Scalar>(omega, line.base, line.direction);
  RowEchelon ech = row_reduce(Mat::from_rows({rows[0], rows[1]}));
  if (ech.reduced.rows() != 2) throw Error("projective line degenerated to a point");
  PlueckerLine out;
  out.pluecker = wedge(ech.reduced.row(0), ech.reduced.row(1));
  out.basis = std::move(ech.reduced);
  return out;
}

Vec boundary_point(const OmegaForm& omega, const HorizontalLine& line) {
  Vec out = line.direction;
  for (const auto& c : omega.apply(line.base.w, line.direction)) out.push_back(Scalar(1, 2) * c);
  normalize_leftmost(out);
  return out;
}

}  // namespace vmrt
