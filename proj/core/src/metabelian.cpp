#include "vmrt/metabelian.hpp"

#include "vmrt/jet.hpp"
#include "vmrt/multipoly.hpp"

namespace vmrt {

OmegaForm::OmegaForm(std::size_t dim_w, std::size_t dim_u)
    : dim_w_(dim_w), dim_u_(dim_u), table_(pair_count(dim_w), zeros(dim_u)) {}

OmegaForm OmegaForm::heisenberg() {
  OmegaForm omega(2, 1);
  omega.set(0, 1, Vec{Scalar(1)});
  return omega;
}

Vec OmegaForm::on_basis(std::size_t i, std::size_t j) const {
  if (i >= dim_w_ || j >= dim_w_) throw DimensionMismatch("omega basis index out of range");
  if (i == j) return zeros(dim_u_);
  if (i < j) return table_[pair_index(i, j, dim_w_)];
  return -table_[pair_index(j, i, dim_w_)];
}

void OmegaForm::set(std::size_t i, std::size_t j, const Vec& value) {
  if (i >= dim_w_ || j >= dim_w_) throw DimensionMismatch("omega basis index out of range");
  require_same_size(value.size(), dim_u_, "omega value");
  if (i == j) {
    if (!vmrt::is_zero(value)) throw Error("omega(e_i, e_i) must vanish");
    return;
  }
  if (i < j) {
    table_[pair_index(i, j, dim_w_)] = value;
  } else {
    table_[pair_index(j, i, dim_w_)] = -value;
  }
}

bool OmegaForm::is_zero() const {
  for (const auto& v : table_) {
    if (!vmrt::is_zero(v)) return false;
  }
  return true;
}

GroupElement identity_element(const OmegaForm& omega) {
  return {zeros(omega.dim_w()), zeros(omega.dim_u())};
}

Vec flatten(const GroupElement& x) {
  Vec out = x.w;
  out.insert(out.end(), x.u.begin(), x.u.end());
  return out;
}

GroupElement unflatten(const OmegaForm& omega, const Vec& coords) {
  require_same_size(coords.size(), omega.dim_g(), "group coordinates");
  const auto split = coords.begin() + static_cast<std::ptrdiff_t>(omega.dim_w());
  return {Vec(coords.begin(), split), Vec(split, coords.end())};
}

GroupElement exp_w(const OmegaForm& omega, const Scalar& t, const Vec& w) {
  require_same_size(w.size(), omega.dim_w(), "exp_w direction");
  return {t * w, zeros(omega.dim_u())};
}

AlgebraElement bracket(const OmegaForm& omega, const AlgebraElement& a, const AlgebraElement& b) {
  return {zeros(omega.dim_w()), omega.apply(a.w, b.w)};
}

AlgebraElement maurer_cartan_log_derivative(const OmegaForm& omega, const GroupElement& x,
                                            const Vec& v) {
  require_same_size(v.size(), omega.dim_w(), "Maurer-Cartan direction");
  const Vec twist = omega.apply(x.w, v);
  AlgebraElement closed{v, Scalar(1, 2) * twist};

  // t -> log(x . (t v, 0)), differentiated at t = 0.
  BasicGroupElement<Jet1> xj{constant_jets(x.w), constant_jets(x.u)};
  BasicGroupElement<Jet1> step;
  const Jet1 t = Jet1::variable(Scalar(0), 0, 1);
  for (const auto& c : v) step.w.push_back(t * Jet1(c));
  step.u.assign(omega.dim_u(), Jet1(0));
  const BasicGroupElement<Jet1> moved = multiply(omega, xj, step);
  AlgebraElement via_jets{partials_of(moved.w, 0), partials_of(moved.u, 0)};

  if (!(via_jets == closed)) {
    throw ConsistencyFailure("Maurer-Cartan closed form disagrees with jet derivative");
  }
  return closed;
}

namespace {

// Left-invariant field z -> (u, omega(z^W, u) / 2) with polynomial coefficients
// in the variables z_0 .. z_{dim g - 1}.
PolyVec left_invariant_field(const OmegaForm& omega, const Vec& u) {
  PolyVec zw;
  for (std::size_t i = 0; i < omega.dim_w(); ++i) zw.push_back(MultiPoly::variable(i));
  const PolyVec uw(u.begin(), u.end());
  PolyVec field(u.begin(), u.end());
  for (auto& c : omega.apply<MultiPoly>(zw, uw)) field.push_back(Scalar(1, 2) * c);
  return field;
}

// [X, Y]^k = sum_j X^j d_j Y^k - Y^j d_j X^k
PolyVec lie_bracket(const PolyVec& x, const PolyVec& y) {
  PolyVec out(x.size());
  for (std::size_t k = 0; k < x.size(); ++k)
    for (std::size_t j = 0; j < x.size(); ++j) {
      out[k] += x[j] * y[k].derivative(j);
      out[k] -= y[j] * x[k].derivative(j);
    }
  return out;
}

}  // namespace

Vec levi_tensor(const OmegaForm& omega, const GroupElement& x, const Vec& u, const Vec& v) {
  require_same_size(u.size(), omega.dim_w(), "Levi tensor argument");
  require_same_size(v.size(), omega.dim_w(), "Levi tensor argument");
  const PolyVec br = lie_bracket(left_invariant_field(omega, u), left_invariant_field(omega, v));
  const Vec at = flatten(x);
  const Vec values = evaluate_all<Scalar>(br, at);
  for (std::size_t i = 0; i < omega.dim_w(); ++i) {
    if (values[i] != 0) throw ConsistencyFailure("bracket of horizontal fields has a W component");
  }
  return Vec(values.begin() + static_cast<std::ptrdiff_t>(omega.dim_w()), values.end());
}

namespace {

BasicGroupElement<MultiPoly> symbolic_element(const OmegaForm& omega, std::size_t first_var) {
  BasicGroupElement<MultiPoly> g;
  std::size_t var = first_var;
  for (std::size_t i = 0; i < omega.dim_w(); ++i) g.w.push_back(MultiPoly::variable(var++));
  for (std::size_t i = 0; i < omega.dim_u(); ++i) g.u.push_back(MultiPoly::variable(var++));
  return g;
}

}  // namespace

bool associativity_holds_symbolically(const OmegaForm& omega) {
  const std::size_t n = omega.dim_g();
  const auto a = symbolic_element(omega, 0);
  const auto b = symbolic_element(omega, n);
  const auto c = symbolic_element(omega, 2 * n);
  return multiply(omega, multiply(omega, a, b), c) == multiply(omega, a, multiply(omega, b, c));
}

bool commutator_identity_holds_symbolically(const OmegaForm& omega) {
  const std::size_t m = omega.dim_w();
  BasicGroupElement<MultiPoly> a, b;
  for (std::size_t i = 0; i < m; ++i) {
    a.w.push_back(MultiPoly::variable(i));
    b.w.push_back(MultiPoly::variable(m + i));
  }
  a.u.assign(omega.dim_u(), MultiPoly());
  b.u.assign(omega.dim_u(), MultiPoly());
  auto step = multiply(omega, a, b);
  step = multiply(omega, step, inverse(a));
  step = multiply(omega, step, inverse(b));
  const BasicGroupElement<MultiPoly> expected{PolyVec(m), omega.apply<MultiPoly>(a.w, b.w)};
  return step == expected;
}

}  // namespace vmrt
