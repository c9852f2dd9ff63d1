#include "vmrt/omega_builder.hpp"

#include "vmrt/exterior.hpp"

namespace vmrt {

namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

std::pair<std::size_t, std::size_t> symmetric_power_dims(std::size_t r, std::size_t k) {
  if (r < 2 || k < 1) throw Error("symmetric_power_dims needs r >= 2 and k >= 1");
  const std::size_t n = binomial(k + r - 1, r - 1);
  return {n, binomial(n, 2)};
}

Vec project_to_complement(const Mat& w_prime_rref, const std::vector<std::size_t>& pivots,
                          const std::vector<std::size_t>& complement, const Vec& z) {
  Vec out(complement.size());
  for (std::size_t c = 0; c < complement.size(); ++c) {
    Scalar v = z[complement[c]];
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      const Scalar& zp = z[pivots[r]];
      if (zp != 0) v -= zp * w_prime_rref(r, complement[c]);
    }
    out[c] = v;
  }
  return out;
}

OmegaConstruction build_omega(const VarietyChart& chart, const OmegaBuildOptions& options) {
  const std::size_t n = chart.ambient_dim();
  OmegaConstruction out;
  out.label = chart.label();
  out.dim_lambda2 = pair_count(n);
  out.seed = options.seed;

  EchelonBasis span(out.dim_lambda2);
  SampleStream stream(options.seed);
  std::size_t quiet = 0;
  std::size_t budget = options.grid_size;
  bool doubled = false;
  std::size_t tried = 0;
  while (quiet < options.stability_window) {
    if (tried == budget) {
      if (doubled) {
        throw SaturationNotReached("chart '" + chart.label() + "': rank still growing after " +
                                   std::to_string(tried) + " sample points");
      }
      doubled = true;
      budget *= 2;
    }
    ++tried;
    const Vec p = stream.next_vector(chart.param_dim());
    if (!frame_is_nondegenerate(chart, p)) {
      ++out.degenerate_skips;
      continue;
    }
    const std::vector<Vec> frame = affine_tangent_frame(chart, p);
    bool grew = false;
    for (std::size_t a = 0; a < frame.size(); ++a)
      for (std::size_t b = a + 1; b < frame.size(); ++b) grew |= span.insert(wedge(frame[a], frame[b]));
    quiet = grew ? 0 : quiet + 1;
    out.rank_history.push_back(span.rank());
  }

  out.w_prime_basis = span.matrix();
  const std::vector<std::size_t> pivots = span.pivots();
  std::vector<bool> is_pivot(out.dim_lambda2, false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t c = 0; c < out.dim_lambda2; ++c) {
    if (!is_pivot[c]) out.complement_coordinates.push_back(c);
  }
  out.dim_u = out.complement_coordinates.size();

  out.omega = OmegaForm(n, out.dim_u);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vec e = unit_vector(out.dim_lambda2, pair_index(i, j, n));
      out.omega.set(i, j, project_to_complement(out.w_prime_basis, pivots, out.complement_coordinates, e));
    }
  return out;
}

}  // namespace vmrt
