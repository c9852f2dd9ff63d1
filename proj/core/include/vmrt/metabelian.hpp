#pragma once

#include <vector>

#include "vmrt/errors.hpp"
#include "vmrt/exterior.hpp"
#include "vmrt/scalar.hpp"

namespace vmrt {

/// Antisymmetric bilinear map W x W -> U, stored as omega(e_i, e_j) for i < j.
class OmegaForm {
 public:
  OmegaForm() = default;
  /// The zero form.
  OmegaForm(std::size_t dim_w, std::size_t dim_u);

  /// Heisenberg form on Q^2: omega(e1, e2) = 1, dim U = 1.
  static OmegaForm heisenberg();

  std::size_t dim_w() const { return dim_w_; }
  std::size_t dim_u() const { return dim_u_; }
  /// dim W + dim U, the dimension of the group.
  std::size_t dim_g() const { return dim_w_ + dim_u_; }

  /// omega(e_i, e_j) for any i, j (antisymmetry applied).
  Vec on_basis(std::size_t i, std::size_t j) const;
  /// Sets omega(e_i, e_j); omega(e_j, e_i) follows by antisymmetry.
  void set(std::size_t i, std::size_t j, const Vec& value);

  /// Table indexed by pair_index(i, j, dim_w) for i < j.
  const std::vector<Vec>& table() const { return table_; }
  bool is_zero() const;

  /// Bilinear extension over any ring R with Scalar * R and R arithmetic.
  template <class R>
  std::vector<R> apply(const std::vector<R>& u, const std::vector<R>& v) const;
  Vec apply(const Vec& u, const Vec& v) const { return apply<Scalar>(u, v); }

  friend bool operator==(const OmegaForm&, const OmegaForm&) = default;

 private:
  std::size_t dim_w_ = 0;
  std::size_t dim_u_ = 0;
  std::vector<Vec> table_;
};

template <class R>
std::vector<R> OmegaForm::apply(const std::vector<R>& u, const std::vector<R>& v) const {
  require_same_size(u.size(), dim_w_, "omega first argument");
  require_same_size(v.size(), dim_w_, "omega second argument");
  std::vector<R> out(dim_u_, R(Scalar(0)));
  for (std::size_t i = 0; i < dim_w_; ++i)
    for (std::size_t j = i + 1; j < dim_w_; ++j) {
      const Vec& entry = table_[pair_index(i, j, dim_w_)];
      if (vmrt::is_zero(entry)) continue;
      const R minor = u[i] * v[j] - u[j] * v[i];
      for (std::size_t k = 0; k < dim_u_; ++k) {
        if (entry[k] != 0) out[k] = out[k] + entry[k] * minor;
      }
    }
  return out;
}

/// A point of the metabelian group G in log coordinates (x^W, x^U), or an
/// element of its Lie algebra W + U; the two share coordinates because exp and
/// log are the identity in these coordinates.
template <class R>
struct BasicGroupElement {
  std::vector<R> w;
  std::vector<R> u;

  friend bool operator==(const BasicGroupElement&, const BasicGroupElement&) = default;
};

using GroupElement = BasicGroupElement<Scalar>;
using AlgebraElement = BasicGroupElement<Scalar>;

GroupElement identity_element(const OmegaForm& omega);
/// Concatenated coordinates (x^W, x^U).
Vec flatten(const GroupElement& x);
GroupElement unflatten(const OmegaForm& omega, const Vec& coords);

/// (w, u) . (w', u') = (w + w', u + u' + omega(w, w') / 2).
template <class R>
BasicGroupElement<R> multiply(const OmegaForm& omega, const BasicGroupElement<R>& a,
                              const BasicGroupElement<R>& b) {
  require_same_size(a.w.size(), omega.dim_w(), "group element W part");
  require_same_size(b.w.size(), omega.dim_w(), "group element W part");
  require_same_size(a.u.size(), omega.dim_u(), "group element U part");
  require_same_size(b.u.size(), omega.dim_u(), "group element U part");
  BasicGroupElement<R> out;
  out.w.reserve(a.w.size());
  for (std::size_t i = 0; i < a.w.size(); ++i) out.w.push_back(a.w[i] + b.w[i]);
  const std::vector<R> twist = omega.apply<R>(a.w, b.w);
  const Scalar half(1, 2);
  out.u.reserve(a.u.size());
  for (std::size_t k = 0; k < a.u.size(); ++k) out.u.push_back(a.u[k] + b.u[k] + half * twist[k]);
  return out;
}

template <class R>
BasicGroupElement<R> inverse(const BasicGroupElement<R>& a) {
  BasicGroupElement<R> out = a;
  for (auto& c : out.w) c = Scalar(-1) * c;
  for (auto& c : out.u) c = Scalar(-1) * c;
  return out;
}

/// exp(t w) = (t w, 0).
GroupElement exp_w(const OmegaForm& omega, const Scalar& t, const Vec& w);

/// Lie bracket on g = W + U: [g, U] = 0 and [w, w'] = omega(w, w').
AlgebraElement bracket(const OmegaForm& omega, const AlgebraElement& a, const AlgebraElement& b);

/// d_x log (d_o L_x (v)) for v in W. Computed both from the closed form
/// v + omega(x^W, v)/2 and by differentiating t -> log(x . (t v, 0)) at t = 0
/// with jets; throws ConsistencyFailure if the two disagree.
AlgebraElement maurer_cartan_log_derivative(const OmegaForm& omega, const GroupElement& x,
                                            const Vec& v);

/// U-component of the Lie bracket of the left-invariant vector fields
/// z -> (u, omega(z^W, u)/2) and z -> (v, omega(z^W, v)/2), evaluated at x.
/// The bracket is taken coefficient-wise on polynomial vector fields; the
/// closed form omega(u, v) is never consulted.
Vec levi_tensor(const OmegaForm& omega, const GroupElement& x, const Vec& u, const Vec& v);

/// (a.b).c == a.(b.c) as a polynomial identity in 3 * dim g variables.
bool associativity_holds_symbolically(const OmegaForm& omega);
/// (w,0)(w',0)(w,0)^-1(w',0)^-1 == (0, omega(w, w')) as a polynomial
/// identity in 2 * dim W variables, evaluated by stepwise application of the
/// group law.
bool commutator_identity_holds_symbolically(const OmegaForm& omega);

}  // namespace vmrt
