#include <set>

#include "doctest.h"

#include "support.hpp"
#include "vmrt/omega_builder.hpp"

using namespace vmrt;

namespace {

// dim W' computed without sampling: expand every wedge f_a ^ f_b of frame
// polynomials and take the rank of all monomial coefficient vectors.
std::size_t symbolic_w_prime_dim(const VarietyChart& chart) {
  const auto& frame = chart.frame_polys();
  const std::size_t n = chart.ambient_dim();
  std::vector<Vec> rows;
  for (std::size_t a = 0; a < frame.size(); ++a)
    for (std::size_t b = a + 1; b < frame.size(); ++b) {
      const PolyVec w = wedge<MultiPoly>(frame[a], frame[b]);
      std::set<MultiPoly::Exponent> monomials;
      for (const auto& c : w)
        for (const auto& [e, coeff] : c.terms()) monomials.insert(e);
      for (const auto& e : monomials) {
        Vec row(pair_count(n));
        for (std::size_t k = 0; k < w.size(); ++k) row[k] = w[k].coefficient(e);
        rows.push_back(std::move(row));
      }
    }
  return rank(Mat::from_rows(rows, pair_count(n)));
}

// Clebsch-Gordan for SL2: Lambda^2 Sym^k = Sym^{2k-2} + Sym^{2k-6} + ...
std::vector<std::size_t> lambda2_sym_summands(std::size_t k) {
  std::vector<std::size_t> dims;
  for (long m = 2 * static_cast<long>(k) - 2; m >= 0; m -= 4) dims.push_back(static_cast<std::size_t>(m) + 1);
  return dims;
}

// Hook-content formula for dim S_lambda(C^n).
std::size_t schur_dim(const std::vector<std::size_t>& lambda, std::size_t n) {
  mpq_class num = 1, den = 1;
  for (std::size_t i = 0; i < lambda.size(); ++i)
    for (std::size_t j = 0; j < lambda[i]; ++j) {
      std::size_t below = 0;
      for (std::size_t r = i + 1; r < lambda.size(); ++r) below += lambda[r] > j;
      num *= static_cast<long>(n + j) - static_cast<long>(i);
      den *= static_cast<long>(lambda[i] - j + below);
    }
  const mpq_class q = num / den;
  return q.get_num().get_ui();
}

Vec apply_linear(const OmegaForm& omega, const Vec& z) {
  Vec out = zeros(omega.dim_u());
  for (std::size_t k = 0; k < z.size(); ++k) out = out + z[k] * omega.table()[k];
  return out;
}

}  // namespace

TEST_CASE("symmetric power dimensions") {
  CHECK(symmetric_power_dims(2, 3) == std::pair<std::size_t, std::size_t>{4, 6});
  CHECK(symmetric_power_dims(3, 3) == std::pair<std::size_t, std::size_t>{10, 45});
  CHECK(symmetric_power_dims(2, 4) == std::pair<std::size_t, std::size_t>{5, 10});
}

TEST_CASE("representation oracles agree with the exterior square dimension") {
  for (std::size_t k = 1; k <= 8; ++k) {
    std::size_t total = 0;
    for (auto d : lambda2_sym_summands(k)) total += d;
    CHECK(total == symmetric_power_dims(2, k).second);
  }
  CHECK(lambda2_sym_summands(3) == std::vector<std::size_t>{5, 1});
  CHECK(lambda2_sym_summands(4) == std::vector<std::size_t>{7, 3});
  // Lambda^2 Sym^3 C^3 = S_{5,1} + S_{3,3}.
  CHECK(schur_dim({3}, 3) == 10);
  CHECK(schur_dim({5, 1}, 3) == 35);
  CHECK(schur_dim({3, 3}, 3) == 10);
}

TEST_CASE("symbolic span oracle confirms the predicted W' dimensions") {
  CHECK(symbolic_w_prime_dim(veronese_chart(2, 3)) == lambda2_sym_summands(3).front());
  CHECK(symbolic_w_prime_dim(veronese_chart(2, 4)) == lambda2_sym_summands(4).front());
  CHECK(symbolic_w_prime_dim(veronese_chart(3, 3)) == schur_dim({5, 1}, 3));
  CHECK(symbolic_w_prime_dim(full_linear_chart(4)) == 6);
}

TEST_CASE("build_omega golden dimensions") {
  struct Golden {
    const char* name;
    std::size_t lambda2, w_prime, dim_u;
  };
  for (const Golden& g : {Golden{"veronese-2-3", 6, 5, 1}, Golden{"veronese-2-4", 10, 7, 3},
                          Golden{"veronese-3-3", 45, 35, 10}, Golden{"v3-conic", 45, 11, 34}}) {
    CAPTURE(g.name);
    const ChartRef chart = builtin_spec(g.name).chart;
    const OmegaConstruction c = build_omega(*chart);
    CHECK(c.dim_lambda2 == g.lambda2);
    CHECK(c.dim_w_prime() == g.w_prime);
    CHECK(c.dim_u == g.dim_u);
    CHECK(c.dim_w_prime() == symbolic_w_prime_dim(*chart));
    CHECK(c.omega.dim_u() == c.dim_u);
    CHECK(certify_isotropic(*chart, c.omega).proven());
    for (std::size_t r = 0; r < c.w_prime_basis.rows(); ++r) CHECK(is_zero(apply_linear(c.omega, c.w_prime_basis.row(r))));
  }
}

TEST_CASE("full linear chart gives omega = 0") {
  for (std::size_t n : {2, 3, 5}) {
    const OmegaConstruction c = build_omega(full_linear_chart(n));
    CHECK(c.dim_u == 0);
    CHECK(c.dim_w_prime() == pair_count(n));
    CHECK(c.omega.is_zero());
  }
}

TEST_CASE("construction is seed independent") {
  for (const char* name : {"veronese-2-3", "veronese-2-4", "veronese-3-3"}) {
    CAPTURE(name);
    const ChartRef chart = builtin_spec(name).chart;
    OmegaBuildOptions o;
    o.seed = 1;
    const OmegaConstruction a = build_omega(*chart, o);
    o.seed = 2;
    const OmegaConstruction b = build_omega(*chart, o);
    o.seed = 99991;
    const OmegaConstruction c = build_omega(*chart, o);
    CHECK(a.dim_w_prime() == b.dim_w_prime());
    CHECK(a.dim_w_prime() == c.dim_w_prime());
    // The echelon basis of a fixed span is unique, so omega is too.
    CHECK(a.omega == b.omega);
    CHECK(a.omega == c.omega);
    CHECK(a.dim_u > 0);
  }
}

TEST_CASE("rank history is monotone, bounded and ends in a stable window") {
  OmegaBuildOptions o;
  const OmegaConstruction c = build_omega(veronese_chart(2, 4), o);
  REQUIRE(c.rank_history.size() >= o.stability_window);
  for (std::size_t i = 1; i < c.rank_history.size(); ++i) CHECK(c.rank_history[i - 1] <= c.rank_history[i]);
  CHECK(c.rank_history.back() <= c.dim_lambda2);
  const std::size_t last = c.rank_history.back();
  for (std::size_t i = c.rank_history.size() - o.stability_window; i < c.rank_history.size(); ++i)
    CHECK(c.rank_history[i] == last);
}

TEST_CASE("complement coordinates and projection") {
  const OmegaConstruction c = build_omega(veronese_chart(2, 3));
  REQUIRE(c.complement_coordinates.size() == 1);
  const auto pivots = row_reduce(c.w_prime_basis).pivots;
  for (auto k : c.complement_coordinates) CHECK(std::find(pivots.begin(), pivots.end(), k) == pivots.end());
  // The projection kills W' and is the identity on complement coordinates.
  for (std::size_t r = 0; r < c.w_prime_basis.rows(); ++r)
    CHECK(is_zero(project_to_complement(c.w_prime_basis, pivots, c.complement_coordinates, c.w_prime_basis.row(r))));
  const Vec e = unit_vector(6, c.complement_coordinates[0]);
  CHECK(project_to_complement(c.w_prime_basis, pivots, c.complement_coordinates, e) == Vec{Scalar(1)});
}

TEST_CASE("saturation failure is reported") {
  OmegaBuildOptions o;
  o.grid_size = 3;
  o.stability_window = 25;
  CHECK_THROWS_AS(build_omega(veronese_chart(2, 3), o), SaturationNotReached);
}
