#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "vmrt/errors.hpp"
#include "vmrt/jet.hpp"
#include "vmrt/matrix.hpp"
#include "vmrt/metabelian.hpp"
#include "vmrt/multipoly.hpp"

namespace vmrt {

class FrameDegenerate : public Error {
 public:
  using Error::Error;
};

class UnsupportedChart : public Error {
 public:
  using Error::Error;
};

/// A polynomial lift p -> phi(p) of a chart of S in P(W) into the cone S+.
///
/// The lift doubles as the local section of S+ -> S: every downstream
/// computation evaluates at the cone point w = phi(p).
class VarietyChart {
 public:
  VarietyChart(std::string label, std::size_t param_dim, PolyVec coords,
               std::vector<std::string> variable_names = {});

  const std::string& label() const { return label_; }
  std::size_t param_dim() const { return param_dim_; }
  std::size_t ambient_dim() const { return coords_.size(); }
  const PolyVec& coords() const { return coords_; }
  const std::vector<std::string>& variable_names() const { return names_; }

  Vec lift(const Vec& p) const;
  JetVec lift(const JetVec& p) const;
  /// d phi_p (delta): the tangent vector in W of the arc p + tau * delta.
  Vec pushforward(const Vec& p, const Vec& delta) const;

  /// [phi, d_1 phi, ..., d_d phi] as polynomial vectors.
  const std::vector<PolyVec>& frame_polys() const { return frame_; }

  /// Parameter point p with phi(p) proportional to w, when the chart has an
  /// affine-graph shape (a constant coordinate and one coordinate linear in
  /// each variable) and w lies on the chart. nullopt otherwise.
  std::optional<Vec> locate(const Vec& w) const;

  /// The chart precomposed with p = images(q); images are polynomials in the
  /// new variables.
  VarietyChart reparametrized(const PolyVec& images, std::size_t new_param_dim,
                              std::string new_label) const;

 private:
  std::string label_;
  std::size_t param_dim_;
  PolyVec coords_;
  std::vector<std::string> names_;
  std::vector<PolyVec> frame_;
};

using ChartRef = std::shared_ptr<const VarietyChart>;

/// [phi(p), d_1 phi(p), ..., d_d phi(p)]; the first vector is the cone point.
/// Throws FrameDegenerate when the frame has rank < d + 1.
std::vector<Vec> affine_tangent_frame(const VarietyChart& chart, const Vec& p);
bool frame_is_nondegenerate(const VarietyChart& chart, const Vec& p);
/// Affine tangent frame as the columns of a dim W x (d + 1) matrix.
Mat frame_matrix(const VarietyChart& chart, const Vec& p);

struct IsotropyCertificate {
  enum class Status { Proven, Failed };

  std::string label;
  Status status = Status::Failed;
  std::size_t pairs_checked = 0;
  // Failure witness: frame vectors a < b with omega(f_a(p), f_b(p)) != 0.
  std::optional<Vec> witness_point;
  std::size_t frame_a = 0;
  std::size_t frame_b = 0;
  Vec witness_value;

  bool proven() const { return status == Status::Proven; }
};

/// Expands omega(f_a, f_b) symbolically for every frame pair a < b and checks
/// that each polynomial vanishes identically.
IsotropyCertificate certify_isotropic(const VarietyChart& chart, const OmegaForm& omega);

/// Monomial chart (1, x_1, ..., x_{r-1}) -> degree-k monomials of P^{r-1},
/// ordered by descending homogeneous exponent vector.
VarietyChart veronese_chart(std::size_t r, std::size_t k);
/// v_k composed with the lift of z: all degree-k monomials in z's coordinates.
VarietyChart veronese_of(const VarietyChart& z, std::size_t k, std::string label);
/// (1, x_1, ..., x_{n-1}): the whole of P(W), dim W = n.
VarietyChart full_linear_chart(std::size_t n);
/// (1, t, t^2) in P^2.
VarietyChart plane_conic_chart();

/// A variety chart with an optional explicitly supplied omega.
struct VarietySpec {
  ChartRef chart;
  std::optional<OmegaForm> omega;
};

/// Catalog names accepted after the "builtin:" prefix.
std::vector<std::string> builtin_names();
/// Throws UnsupportedChart for unknown names, including veronese-r-k outside
/// {(2,3), (2,4), (3,3)}.
VarietySpec builtin_spec(const std::string& name);

}  // namespace vmrt
