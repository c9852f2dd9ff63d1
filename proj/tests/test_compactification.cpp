#include "doctest.h"

#include "support.hpp"
#include "vmrt/compactification.hpp"

using namespace vmrt;
using vmrt::testing::ints;

namespace {

GroupElement random_element(const OmegaForm& omega, SampleStream& s) {
  return unflatten(omega, s.next_vector(omega.dim_g()));
}

// x^-1 y in exp(T_s S+), by rank count rather than span solving.
bool coset_oracle(const OmegaForm& omega, const VarietyChart& chart, const Vec& p, const GroupElement& x,
                  const GroupElement& y) {
  const GroupElement rel = multiply(omega, inverse(x), y);
  if (!is_zero(rel.u)) return false;
  std::vector<Vec> rows = affine_tangent_frame(chart, p);
  const std::size_t r = rank(Mat::from_rows(rows));
  rows.push_back(rel.w);
  return rank(Mat::from_rows(rows)) == r;
}

OnSection on(const OmegaForm& omega, const ChartRef& chart, const Vec& p, const GroupElement& x) {
  return OnSection{chart, line_through(omega, x, chart->lift(p))};
}

}  // namespace

TEST_CASE("mu_hat examples") {
  const VarietySpec spec = vmrt::testing::resolved("veronese-2-3");
  const OmegaForm& omega = *spec.omega;
  SampleStream s(60);
  const Vec p = s.next_vector(1);
  const GroupElement o = identity_element(omega);
  CHECK(mu_hat(omega, OffSection{{spec.chart, p, o}}) == XPoint(Interior{o}));

  for (int i = 0; i < 20; ++i) {
    const GroupElement x = random_element(omega, s);
    const Vec v = spec.chart->pushforward(p, s.next_vector(1));
    const GroupElement g{v, zeros(omega.dim_u())};
    CHECK(mu_hat(omega, on(omega, spec.chart, p, x)) == mu_hat(omega, on(omega, spec.chart, p, multiply(omega, x, g))));
    Vec p2 = s.next_vector(1);
    if (p2 == p) continue;
    CHECK(mu_hat(omega, on(omega, spec.chart, p, x)) != mu_hat(omega, on(omega, spec.chart, p2, x)));
  }
}

TEST_CASE("mu_hat rejects directions off the chart") {
  const VarietySpec spec = vmrt::testing::resolved("veronese-2-3");
  const OmegaForm& omega = *spec.omega;
  const OnSection bad{spec.chart, line_through(omega, identity_element(omega), ints({1, 1, 1, 2}))};
  CHECK_THROWS_AS(mu_hat(omega, bad), DirectionNotOnChart);
}

TEST_CASE("canonical coset representatives") {
  const VarietySpec spec = vmrt::testing::resolved("veronese-3-3");
  const OmegaForm& omega = *spec.omega;
  SampleStream s(61);
  for (int i = 0; i < 20; ++i) {
    const Vec p = vmrt::testing::nondegenerate_point(*spec.chart, s);
    const GroupElement x = random_element(omega, s);
    const Mat frame = frame_matrix(*spec.chart, p);
    const GroupElement c = canonical_coset(omega, frame, x);
    for (auto pivot : row_reduce(frame.transposed()).pivots) CHECK(c.w[pivot] == 0);
    CHECK(coset_oracle(omega, *spec.chart, p, x, c));
    CHECK(canonical_coset(omega, frame, c) == c);
  }
}

TEST_CASE("xi-fiber characterization on 100 pairs") {
  for (const char* name : {"veronese-2-3", "veronese-3-3"}) {
    CAPTURE(name);
    const VarietySpec spec = vmrt::testing::resolved(name);
    const OmegaForm& omega = *spec.omega;
    const ChartRef& chart = spec.chart;
    SampleStream s(62);
    std::size_t equal_pairs = 0;
    for (int i = 0; i < 100; ++i) {
      const Vec p = vmrt::testing::nondegenerate_point(*chart, s);
      const GroupElement x = random_element(omega, s);
      GroupElement y;
      Vec p2 = p;
      switch (i % 3) {
        case 0: {
          // Stay in the coset: move by a random element of T_s S+.
          const auto frame = affine_tangent_frame(*chart, p);
          Vec shift = zeros(omega.dim_w());
          for (const auto& f : frame) shift = shift + s.next_scalar() * f;
          y = multiply(omega, x, GroupElement{shift, zeros(omega.dim_u())});
          break;
        }
        case 1:
          y = random_element(omega, s);
          break;
        default:
          y = x;
          p2 = vmrt::testing::nondegenerate_point(*chart, s);
          break;
      }
      const bool oracle = p2 == p && coset_oracle(omega, *chart, p, x, y);
      equal_pairs += oracle;
      CHECK((mu_hat(omega, on(omega, chart, p, x)) == mu_hat(omega, on(omega, chart, p2, y))) == oracle);
    }
    CHECK(equal_pairs >= 30);
  }
}

TEST_CASE("compactified lines") {
  const VarietySpec spec = vmrt::testing::resolved("veronese-2-4");
  const OmegaForm& omega = *spec.omega;
  SampleStream s(63);
  const std::vector<Scalar> grid{-2, -1, 0, make_scalar(1, 3), 1, 5};
  for (int i = 0; i < 10; ++i) {
    const Vec p = s.next_vector(1);
    const GroupElement x = random_element(omega, s);
    const CompactifiedLine cl = compactified_line(omega, spec.chart, p, x, grid);
    REQUIRE(cl.interior.size() == grid.size());
    CHECK(is_boundary(cl.at_infinity));
    const Vec w = spec.chart->lift(p);
    const TangentDirectionPoint alpha{spec.chart, p, x};
    for (std::size_t k = 0; k < grid.size(); ++k) {
      const auto& pt = std::get<Interior>(cl.interior[k]).x;
      CHECK(pt.w == x.w + grid[k] * w);
      CHECK(pt.u == x.u + (grid[k] / 2) * omega.apply(x.w, w));
      for (std::size_t m = 0; m < k; ++m) CHECK(cl.interior[m] != cl.interior[k]);
      CHECK(mu_hat(omega, OffSection{phi_action(omega, grid[k], alpha)}) == cl.interior[k]);
      CHECK(mu_hat(omega, OnSection{spec.chart, line_through(omega, pt, w)}) == cl.at_infinity);
    }
  }
}

TEST_CASE("flat case boundary") {
  // S = PW: T_s S+ = W so every base point gives the same class.
  const VarietySpec lin = builtin_spec("linear-3");
  SampleStream s(64);
  const Vec p = s.next_vector(2);
  const XPoint first = mu_hat(*lin.omega, on(*lin.omega, lin.chart, p, random_element(*lin.omega, s)));
  for (int i = 0; i < 10; ++i)
    CHECK(mu_hat(*lin.omega, on(*lin.omega, lin.chart, p, random_element(*lin.omega, s))) == first);

  // Plane conic: T_s S+ is a plane in W = C^3 and the boundary remembers x mod it.
  const VarietySpec conic = builtin_spec("flat-conic");
  const Vec q = s.next_vector(1);
  const GroupElement x = random_element(*conic.omega, s);
  const BoundaryPoint b = std::get<BoundaryPoint>(mu_hat(*conic.omega, on(*conic.omega, conic.chart, q, x)));
  CHECK(coset_oracle(*conic.omega, *conic.chart, q, x, b.coset));
}

TEST_CASE("boundary over a fixed point is injective in p") {
  const VarietySpec spec = vmrt::testing::resolved("veronese-3-3");
  const OmegaForm& omega = *spec.omega;
  SampleStream s(65);
  const GroupElement x = random_element(omega, s);
  std::vector<std::pair<Vec, XPoint>> seen;
  for (int i = 0; i < 30; ++i) {
    const Vec p = s.next_vector(2);
    const XPoint b = mu_hat(omega, on(omega, spec.chart, p, x));
    for (const auto& [q, c] : seen) CHECK((q == p) == (c == b));
    seen.emplace_back(p, b);
  }
}

TEST_CASE("group action axioms and equivariance on 50 samples") {
  const VarietySpec spec = vmrt::testing::resolved("veronese-2-3");
  const OmegaForm& omega = *spec.omega;
  SampleStream s(66);
  for (int i = 0; i < 50; ++i) {
    const Vec p = s.next_vector(1);
    const GroupElement x = random_element(omega, s);
    const GroupElement g1 = random_element(omega, s), g2 = random_element(omega, s);
    const TangentDirectionPoint alpha{spec.chart, p, x};
    for (const PBundlePoint& pt : {PBundlePoint(OffSection{alpha}), PBundlePoint(on(omega, spec.chart, p, x))}) {
      const XPoint image = mu_hat(omega, pt);
      CHECK(g_action(omega, identity_element(omega), image) == image);
      CHECK(g_action(omega, g1, g_action(omega, g2, image)) == g_action(omega, multiply(omega, g1, g2), image));
      CHECK(mu_hat(omega, g_action(omega, g1, pt)) == g_action(omega, g1, image));
    }
    CHECK(g_action(omega, g1, XPoint(Interior{x})) == XPoint(Interior{multiply(omega, g1, x)}));
  }
}
