#include "doctest.h"

#include "support.hpp"
#include "vmrt/variety.hpp"

using namespace vmrt;
using vmrt::testing::ints;

TEST_CASE("affine tangent frame examples") {
  const VarietyChart cubic = veronese_chart(2, 3);
  CHECK(affine_tangent_frame(cubic, ints({0})) == std::vector<Vec>{ints({1, 0, 0, 0}), ints({0, 1, 0, 0})});
  CHECK(affine_tangent_frame(cubic, ints({1})) == std::vector<Vec>{ints({1, 1, 1, 1}), ints({0, 1, 2, 3})});

  const VarietyChart v22 = veronese_chart(3, 2);
  CHECK(affine_tangent_frame(v22, ints({0, 0})) ==
        std::vector<Vec>{ints({1, 0, 0, 0, 0, 0}), ints({0, 1, 0, 0, 0, 0}), ints({0, 0, 1, 0, 0, 0})});
}

TEST_CASE("degenerate frames are rejected") {
  const MultiPoly t = MultiPoly::variable(0);
  const VarietyChart cusp("cusp", 1, PolyVec{MultiPoly(1), t * t, t * t * t});
  CHECK_THROWS_AS(affine_tangent_frame(cusp, ints({0})), FrameDegenerate);
  CHECK_FALSE(frame_is_nondegenerate(cusp, ints({0})));
  CHECK(frame_is_nondegenerate(cusp, ints({1})));
}

TEST_CASE("builtin catalog dimensions") {
  CHECK(veronese_chart(2, 3).ambient_dim() == 4);
  CHECK(veronese_chart(2, 3).param_dim() == 1);
  CHECK(veronese_chart(2, 4).ambient_dim() == 5);
  CHECK(veronese_chart(3, 3).ambient_dim() == 10);
  CHECK(veronese_chart(3, 3).param_dim() == 2);
  CHECK(veronese_chart(2, 3).coords() ==
        PolyVec{MultiPoly(1), MultiPoly::variable(0), MultiPoly::variable(0).pow(2), MultiPoly::variable(0).pow(3)});
  CHECK_THROWS_AS(veronese_chart(1, 3), UnsupportedChart);
  CHECK_THROWS_AS(builtin_spec("veronese-9-9"), UnsupportedChart);
  for (const auto& name : builtin_names()) CHECK_NOTHROW(builtin_spec(name));
}

TEST_CASE("frames have full rank at 100 sample points on every builtin") {
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    const ChartRef chart = builtin_spec(name).chart;
    SampleStream s(31);
    std::size_t good = 0;
    for (int i = 0; i < 100; ++i) good += frame_is_nondegenerate(*chart, s.next_vector(chart->param_dim()));
    CHECK(good == 100);
  }
}

TEST_CASE("isotropy certificates") {
  for (const auto& name : vmrt::testing::isotropic_fixtures()) {
    CAPTURE(name);
    const VarietySpec spec = vmrt::testing::resolved(name);
    const IsotropyCertificate cert = certify_isotropic(*spec.chart, *spec.omega);
    CHECK(cert.proven());
    CHECK(cert.pairs_checked == pair_count(spec.chart->param_dim() + 1));
  }
  // omega = 0 certifies any chart.
  CHECK(certify_isotropic(veronese_chart(2, 3), OmegaForm(4, 0)).proven());
  CHECK(certify_isotropic(veronese_chart(3, 3), OmegaForm(10, 2)).proven());
}

TEST_CASE("adversarial omega fails with a witness at the origin") {
  const VarietySpec spec = builtin_spec("twisted-cubic-adversarial");
  const IsotropyCertificate cert = certify_isotropic(*spec.chart, *spec.omega);
  CHECK_FALSE(cert.proven());
  REQUIRE(cert.witness_point);
  // At p = 0 the frame is (e1, e2) and omega(e1, e2) = 1.
  CHECK(*cert.witness_point == ints({0}));
  CHECK(cert.frame_a == 0);
  CHECK(cert.frame_b == 1);
  CHECK(cert.witness_value == ints({1}));
}

TEST_CASE("witness search moves off the origin when the origin is silent") {
  // omega(e3, e4) = 1 vanishes on the frame at t = 0 but not identically.
  OmegaForm omega(4, 1);
  omega.set(2, 3, ints({1}));
  const IsotropyCertificate cert = certify_isotropic(veronese_chart(2, 3), omega);
  CHECK_FALSE(cert.proven());
  REQUIRE(cert.witness_point);
  const std::vector<Vec> frame = affine_tangent_frame(veronese_chart(2, 3), *cert.witness_point);
  CHECK(omega.apply(frame[cert.frame_a], frame[cert.frame_b]) == cert.witness_value);
  CHECK_FALSE(is_zero(cert.witness_value));
}

TEST_CASE("isotropy is invariant under unimodular reparametrization") {
  SampleStream s(77);
  const MultiPoly t = MultiPoly::variable(0), u = MultiPoly::variable(1);
  for (int i = 0; i < 5; ++i) {
    const Scalar b0 = s.next_scalar(), b1 = s.next_scalar();
    const long k = s.next_int(-5, 5);
    const long sign = i % 2 ? -1 : 1;

    const VarietySpec cubic = vmrt::testing::resolved("veronese-2-3");
    const VarietyChart c1 = cubic.chart->reparametrized(PolyVec{sign * t + b0}, 1, "cubic-reparam");
    CHECK(certify_isotropic(c1, *cubic.omega).proven());
    const VarietySpec adv = builtin_spec("twisted-cubic-adversarial");
    CHECK_FALSE(certify_isotropic(adv.chart->reparametrized(PolyVec{sign * t + b0}, 1, "adv"), *adv.omega).proven());

    // [[1, k], [0, sign]] has determinant +-1.
    const VarietySpec v33 = vmrt::testing::resolved("veronese-3-3");
    const VarietyChart c2 =
        v33.chart->reparametrized(PolyVec{t + Scalar(k) * u + b0, Scalar(sign) * u + b1}, 2, "v33-reparam");
    CHECK(certify_isotropic(c2, *v33.omega).proven());
  }
}

TEST_CASE("locate inverts the lift up to scale on affine-graph charts") {
  SampleStream s(12);
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    const ChartRef chart = builtin_spec(name).chart;
    for (int i = 0; i < 10; ++i) {
      const Vec p = s.next_vector(chart->param_dim());
      const auto found = chart->locate(s.next_nonzero() * chart->lift(p));
      REQUIRE(found);
      CHECK(*found == p);
    }
  }
  CHECK_FALSE(veronese_chart(2, 3).locate(ints({1, 1, 1, 2})));
  CHECK_FALSE(veronese_chart(2, 3).locate(ints({0, 0, 0, 1})));
}

TEST_CASE("composed Veronese chart") {
  const VarietyChart v = veronese_of(plane_conic_chart(), 3, "v3-conic");
  CHECK(v.ambient_dim() == 10);
  CHECK(v.param_dim() == 1);
  // The image of a degree-6 rational curve spans only 7 of the 10 coordinates.
  std::vector<Vec> points;
  SampleStream s(1);
  for (int i = 0; i < 12; ++i) points.push_back(v.lift(s.next_vector(1)));
  CHECK(rank(Mat::from_rows(points)) == 7);
}
