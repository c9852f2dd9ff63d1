#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vmrt/grassmann.hpp"
#include "vmrt/lines.hpp"
#include "vmrt/matrix.hpp"
#include "vmrt/metabelian.hpp"
#include "vmrt/variety.hpp"

namespace vmrt {

class RankDeficient : public Error {
 public:
  using Error::Error;
};

/// Geometry of the family of S-lines at one chart: the map
/// (p, x) -> theta(line through x in direction phi(p)) read in Grassmann
/// charts of Gr(2, W + U + C).
class LineFamily {
 public:
  LineFamily(OmegaForm omega, ChartRef chart);

  const OmegaForm& omega() const { return omega_; }
  const VarietyChart& chart() const { return *chart_; }
  const ChartRef& chart_ref() const { return chart_; }
  /// dim V = dim W + dim U + 1.
  std::size_t dim_v() const { return omega_.dim_g() + 1; }

  /// Plücker image of the line through x in direction phi(p).
  PlueckerLine plane(const Vec& p, const GroupElement& x) const;
  GrassmannChart primary_chart(const Vec& p, const GroupElement& x) const;

  Vec chart_coordinates(const GrassmannChart& g, const Vec& p, const GroupElement& x) const;

  /// d rho(v_t) in chart coordinates, as a 2 x (dim V - 2) matrix: the
  /// derivative at tau = 0 of tau -> chart(theta(l^{phi(p + tau delta)}_{x_t}))
  /// with x_t = x . exp(t phi(p)).
  Mat rho_tangent(const GrassmannChart& g, const Vec& p, const GroupElement& x, const Vec& delta,
                  const Scalar& t) const;

  /// The same derivative computed without jets: Plücker coordinates as
  /// polynomials in tau, chart entries as their quotients, differentiated
  /// with the quotient rule.
  Mat rho_tangent_symbolic(const GrassmannChart& g, const Vec& p, const GroupElement& x,
                           const Vec& delta, const Scalar& t) const;

  /// Columns: chart tangents of eps -> theta(l^w_{x . exp(eps xi_i)}) for the
  /// coordinate basis xi_i of g = W + U. Its kernel is C (w, 0) and it inverts
  /// gamma_l on g / C w.
  Mat basepoint_variation(const GrassmannChart& g, const GroupElement& x, const Vec& w) const;

 private:
  OmegaForm omega_;
  ChartRef chart_;
};

struct HtCheck {
  enum class Outcome { Pass, Mismatch, NotInSpan };

  Outcome outcome = Outcome::Mismatch;
  /// Canonical coset representative c with basepoint_variation * c = h.
  Vec solution;
  /// -t v with v = d phi_p(delta), as an element of g.
  Vec expected;
  /// c lies in (T_w S+) + 0, the image of the foliation directions.
  bool in_foliation = false;
  std::string detail;

  bool passed() const { return outcome == Outcome::Pass && in_foliation; }
};

/// Checks gamma_l(h_t(v)) = -t v modulo C w exactly, where
/// h_t(v) = rho_tangent(..., t) - rho_tangent(..., 0).
HtCheck check_h_t_identity(const LineFamily& family, const GrassmannChart& g, const Vec& p,
                           const GroupElement& x, const Vec& delta, const Scalar& t);

/// Basepoint-variation rank is dim g - 1 with kernel spanned by (w, 0).
bool basepoint_variation_is_well_defined(const LineFamily& family, const GrassmannChart& g,
                                         const GroupElement& x, const Vec& w);

struct TensorSplitFrames {
  Mat j0;      // columns: rho_tangent at t = 0 along each parameter direction
  Mat j_inf;   // columns: -basepoint_variation (d_i phi(p), 0)
  std::size_t combined_rank = 0;
};

/// Sample values of t at which j_t = j_0 + t j_inf is checked.
std::vector<Scalar> tensor_split_probe_times();

/// Throws RankDeficient when rank [j0 | j_inf] != 2d, and ConsistencyFailure
/// when j_t != j_0 + t j_inf at a probe time.
TensorSplitFrames tensor_split_frames(const LineFamily& family, const GrassmannChart& g,
                                      const Vec& p, const GroupElement& x);

struct SplittingWitness {
  bool passed = false;
  std::size_t combined_rank = 0;
  std::size_t rank_at_infinity = 0;  // rank of F(0) = j_inf
  std::vector<std::size_t> ranks_at_probes;
};

/// F(s) = s j0 + j_inf must have rank d at s = 0 and at nonzero probes, with
/// [j0 | j_inf] of rank 2d.
SplittingWitness splitting_type_witness(const Mat& j0, const Mat& j_inf, std::size_t d);

struct FamilyDimension {
  std::size_t max_rank = 0;
  std::size_t expected = 0;  // dim W + dim U - 1 + d
  std::size_t points = 0;

  bool matches() const { return max_rank == expected; }
};

/// Max rank of the Jacobian of (p, x) -> chart(theta(l^{phi(p)}_x)) over
/// deterministic sample points.
FamilyDimension family_dimension(const LineFamily& family, std::uint64_t seed,
                                 std::size_t points = 10);

}  // namespace vmrt
