#include "vmrt/family.hpp"

#include "vmrt/multipoly.hpp"

namespace vmrt {

LineFamily::LineFamily(OmegaForm omega, ChartRef chart) : omega_(std::move(omega)), chart_(std::move(chart)) {
  require_same_size(chart_->ambient_dim(), omega_.dim_w(), "chart ambient dimension vs dim W");
}

PlueckerLine LineFamily::plane(const Vec& p, const GroupElement& x) const {
  return plucker_embed(omega_, line_through(omega_, x, chart_->lift(p)));
}

GrassmannChart LineFamily::primary_chart(const Vec& p, const GroupElement& x) const {
  return GrassmannChart::primary_for(plane(p, x));
}

Vec LineFamily::chart_coordinates(const GrassmannChart& g, const Vec& p, const GroupElement& x) const {
  return g.coordinates(line_rows<Scalar>(omega_, x, chart_->lift(p)));
}

Mat LineFamily::rho_tangent(const GrassmannChart& g, const Vec& p, const GroupElement& x,
                            const Vec& delta, const Scalar& t) const {
  require_same_size(delta.size(), chart_->param_dim(), "rho_tangent direction");
  const Vec w = chart_->lift(p);
  const GroupElement xt = point_on_line(omega_, x, w, t);

  JetVec arc;
  for (std::size_t i = 0; i < p.size(); ++i) arc.emplace_back(p[i], Vec{delta[i]});
  const JetVec q = chart_->lift(arc);
  const BasicGroupElement<Jet1> base{constant_jets(xt.w), constant_jets(xt.u)};
  const JetVec coords = g.coordinates(line_rows<Jet1>(omega_, base, q));

  const std::size_t per_row = dim_v() - 2;
  Mat out(2, per_row);
  for (std::size_t k = 0; k < coords.size(); ++k) out(k / per_row, k % per_row) = coords[k].partial(0);
  return out;
}

Mat LineFamily::rho_tangent_symbolic(const GrassmannChart& g, const Vec& p, const GroupElement& x,
                                     const Vec& delta, const Scalar& t) const {
  require_same_size(delta.size(), chart_->param_dim(), "rho_tangent direction");
  const Vec w = chart_->lift(p);
  const GroupElement xt = point_on_line(omega_, x, w, t);

  const MultiPoly tau = MultiPoly::variable(0);
  PolyVec arc;
  for (std::size_t i = 0; i < p.size(); ++i) arc.push_back(MultiPoly(p[i]) + delta[i] * tau);
  PolyVec q;
  for (const auto& c : chart_->coords()) q.push_back(c.substitute(arc));
  const BasicGroupElement<MultiPoly> base{PolyVec(xt.w.begin(), xt.w.end()),
                                          PolyVec(xt.u.begin(), xt.u.end())};
  const auto rows = line_rows<MultiPoly>(omega_, base, q);

  auto minor = [&](std::size_t i, std::size_t j) { return rows[0][i] * rows[1][j] - rows[0][j] * rows[1][i]; };
  const Vec origin{Scalar(0)};
  auto at0 = [&](const MultiPoly& f) { return f.evaluate(origin); };
  auto d_at0 = [&](const MultiPoly& f) { return f.derivative(0).evaluate(origin); };

  const std::size_t a = g.pivot_a();
  const std::size_t b = g.pivot_b();
  const MultiPoly den = minor(a, b);
  const Scalar den0 = at0(den);
  if (den0 == 0) throw ChartMiss("plane leaves the Grassmann chart");
  const Scalar dden0 = d_at0(den);
  auto quotient_derivative = [&](const MultiPoly& num) {
    return Scalar((d_at0(num) * den0 - at0(num) * dden0) / (den0 * den0));
  };

  const std::size_t per_row = dim_v() - 2;
  Mat out(2, per_row);
  std::size_t k = 0;
  for (std::size_t c = 0; c < dim_v(); ++c) {
    if (c == a || c == b) continue;
    out(0, k) = quotient_derivative(minor(c, b));
    out(1, k) = quotient_derivative(minor(a, c));
    ++k;
  }
  return out;
}

Mat LineFamily::basepoint_variation(const GrassmannChart& g, const GroupElement& x, const Vec& w) const {
  const std::size_t m = omega_.dim_g();
  BasicGroupElement<Jet1> eps;
  for (std::size_t i = 0; i < omega_.dim_w(); ++i) eps.w.push_back(Jet1::variable(Scalar(0), i, m));
  for (std::size_t i = 0; i < omega_.dim_u(); ++i)
    eps.u.push_back(Jet1::variable(Scalar(0), omega_.dim_w() + i, m));
  const BasicGroupElement<Jet1> base{constant_jets(x.w), constant_jets(x.u)};
  const auto moved = multiply(omega_, base, eps);
  const JetVec coords = g.coordinates(line_rows<Jet1>(omega_, moved, constant_jets(w)));
  Mat out(coords.size(), m);
  for (std::size_t r = 0; r < coords.size(); ++r)
    for (std::size_t i = 0; i < m; ++i) out(r, i) = coords[r].partial(i);
  return out;
}

namespace {

bool in_line_of(const Vec& v, const Vec& w) { return is_zero(wedge(v, w)); }

}  // namespace

HtCheck check_h_t_identity(const LineFamily& family, const GrassmannChart& g, const Vec& p,
                           const GroupElement& x, const Vec& delta, const Scalar& t) {
  const OmegaForm& omega = family.omega();
  const Vec w = family.chart().lift(p);
  const Mat h = family.rho_tangent(g, p, x, delta, t) - family.rho_tangent(g, p, x, delta, Scalar(0));
  const Mat bvm = family.basepoint_variation(g, x, w);

  HtCheck out;
  Vec v = family.chart().pushforward(p, delta);
  out.expected = Scalar(-t) * v;
  out.expected.resize(omega.dim_g(), Scalar(0));

  const SpanSolution sol = solve_in_span(bvm, h.entries());
  if (!sol) {
    out.outcome = HtCheck::Outcome::NotInSpan;
    out.detail = "h_t lies outside the basepoint-variation image";
    return out;
  }
  out.solution = *sol.coefficients;
  const GroupElement c = unflatten(omega, out.solution);

  const GroupElement diff = unflatten(omega, out.solution - out.expected);
  if (is_zero(diff.u) && in_line_of(diff.w, w)) {
    out.outcome = HtCheck::Outcome::Pass;
  } else {
    out.outcome = HtCheck::Outcome::Mismatch;
    out.detail = "gamma(h_t(v)) = " + to_string(out.solution) + " but -t v = " + to_string(out.expected);
  }
  out.in_foliation = is_zero(c.u) && solve_in_span(frame_matrix(family.chart(), p), c.w).in_span();
  if (!out.in_foliation && out.detail.empty()) out.detail = "solution leaves the foliation directions";
  return out;
}

bool basepoint_variation_is_well_defined(const LineFamily& family, const GrassmannChart& g,
                                         const GroupElement& x, const Vec& w) {
  const Mat bvm = family.basepoint_variation(g, x, w);
  const Mat kernel = kernel_basis(bvm);
  if (kernel.cols() != 1) return false;
  const GroupElement k = unflatten(family.omega(), kernel.column(0));
  return is_zero(k.u) && in_line_of(k.w, w);
}

std::vector<Scalar> tensor_split_probe_times() {
  return {Scalar(1), Scalar(2), Scalar(-1), Scalar(1, 2), Scalar(7)};
}

TensorSplitFrames tensor_split_frames(const LineFamily& family, const GrassmannChart& g, const Vec& p,
                                      const GroupElement& x) {
  const VarietyChart& chart = family.chart();
  const std::size_t d = chart.param_dim();
  const Vec w = chart.lift(p);
  const Mat bvm = family.basepoint_variation(g, x, w);
  const std::vector<Vec> frame = affine_tangent_frame(chart, p);

  std::vector<Vec> j0_cols, jinf_cols;
  for (std::size_t i = 0; i < d; ++i) {
    j0_cols.push_back(family.rho_tangent(g, p, x, unit_vector(d, i), Scalar(0)).entries());
    Vec lifted = frame[i + 1];
    lifted.resize(family.omega().dim_g(), Scalar(0));
    jinf_cols.push_back(-(bvm * lifted));
  }
  TensorSplitFrames out;
  out.j0 = Mat::from_columns(j0_cols, g.coordinate_count());
  out.j_inf = Mat::from_columns(jinf_cols, g.coordinate_count());
  out.combined_rank = rank(out.j0.hstack(out.j_inf));
  if (out.combined_rank != 2 * d) {
    throw RankDeficient("rank [j0 | j_inf] = " + std::to_string(out.combined_rank) + ", expected " +
                        std::to_string(2 * d));
  }
  for (const Scalar& t : tensor_split_probe_times()) {
    std::vector<Vec> jt_cols;
    for (std::size_t i = 0; i < d; ++i)
      jt_cols.push_back(family.rho_tangent(g, p, x, unit_vector(d, i), t).entries());
    const Mat jt = Mat::from_columns(jt_cols, g.coordinate_count());
    if (!(jt == out.j0 + t * out.j_inf)) {
      throw ConsistencyFailure("j_t != j_0 + t j_inf at t = " + to_string(t));
    }
  }
  return out;
}

SplittingWitness splitting_type_witness(const Mat& j0, const Mat& j_inf, std::size_t d) {
  SplittingWitness out;
  out.combined_rank = rank(j0.hstack(j_inf));
  out.rank_at_infinity = rank(j_inf);
  bool ok = out.combined_rank == 2 * d && out.rank_at_infinity == d;
  for (const Scalar& s : {Scalar(1), Scalar(-1), Scalar(2), Scalar(1, 2), Scalar(3)}) {
    const std::size_t r = rank(s * j0 + j_inf);
    out.ranks_at_probes.push_back(r);
    ok = ok && r == d;
  }
  out.passed = ok;
  return out;
}

FamilyDimension family_dimension(const LineFamily& family, std::uint64_t seed, std::size_t points) {
  const VarietyChart& chart = family.chart();
  const OmegaForm& omega = family.omega();
  const std::size_t d = chart.param_dim();
  const std::size_t n = omega.dim_g();
  const std::size_t vars = d + n;

  FamilyDimension out;
  out.expected = n - 1 + d;
  SampleStream stream(seed);
  while (out.points < points) {
    const Vec p = stream.next_vector(d);
    const GroupElement x = unflatten(omega, stream.next_vector(n));
    if (!frame_is_nondegenerate(chart, p)) continue;
    ++out.points;

    JetVec pj;
    for (std::size_t i = 0; i < d; ++i) pj.push_back(Jet1::variable(p[i], i, vars));
    BasicGroupElement<Jet1> xj;
    for (std::size_t i = 0; i < omega.dim_w(); ++i) xj.w.push_back(Jet1::variable(x.w[i], d + i, vars));
    for (std::size_t i = 0; i < omega.dim_u(); ++i)
      xj.u.push_back(Jet1::variable(x.u[i], d + omega.dim_w() + i, vars));
    const GrassmannChart g = family.primary_chart(p, x);
    const JetVec coords = g.coordinates(line_rows<Jet1>(omega, xj, chart.lift(pj)));
    Mat jac(coords.size(), vars);
    for (std::size_t r = 0; r < coords.size(); ++r)
      for (std::size_t c = 0; c < vars; ++c) jac(r, c) = coords[r].partial(c);
    out.max_rank = std::max(out.max_rank, rank(jac));
  }
  return out;
}

}  // namespace vmrt
