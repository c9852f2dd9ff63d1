#include <chrono>

#include "doctest.h"

#include "support.hpp"
#include "vmrt/metabelian.hpp"

using namespace vmrt;
using vmrt::testing::ints;

namespace {

const Vec e1 = ints({1, 0});
const Vec e2 = ints({0, 1});

GroupElement elem(Vec w, Vec u) { return GroupElement{std::move(w), std::move(u)}; }

OmegaForm random_omega(std::size_t dim_w, std::size_t dim_u, std::uint64_t seed) {
  OmegaForm omega(dim_w, dim_u);
  SampleStream s(seed);
  for (std::size_t i = 0; i < dim_w; ++i)
    for (std::size_t j = i + 1; j < dim_w; ++j) omega.set(i, j, s.next_vector(dim_u));
  return omega;
}

}  // namespace

TEST_CASE("Heisenberg multiplication") {
  const OmegaForm h = OmegaForm::heisenberg();
  CHECK(multiply(h, elem(e1, ints({0})), elem(e2, ints({0}))) == elem(ints({1, 1}), Vec{make_scalar(1, 2)}));
  const GroupElement x = elem(ints({3, -2}), Vec{make_scalar(5, 3)});
  CHECK(multiply(h, x, inverse(x)) == identity_element(h));
  CHECK(multiply(h, x, elem(-x.w, -x.u)) == identity_element(h));
}

TEST_CASE("omega table convention: set(i, j) with i > j stores the negative") {
  OmegaForm omega(3, 1);
  omega.set(2, 0, ints({4}));
  CHECK(omega.on_basis(0, 2) == ints({-4}));
  CHECK(omega.apply(ints({1, 0, 0}), ints({0, 0, 1})) == ints({-4}));
  CHECK_THROWS(omega.set(1, 1, ints({1})));
}

TEST_CASE("group commutator of W elements is omega") {
  const OmegaForm omega = random_omega(4, 2, 9);
  SampleStream s(2);
  for (int i = 0; i < 20; ++i) {
    const GroupElement a{s.next_vector(4), zeros(2)};
    const GroupElement b{s.next_vector(4), zeros(2)};
    // Step-by-step application of the law as the oracle.
    GroupElement c = multiply(omega, a, b);
    c = multiply(omega, c, inverse(a));
    c = multiply(omega, c, inverse(b));
    CHECK(c == GroupElement{zeros(4), omega.apply(a.w, b.w)});
  }
  CHECK(commutator_identity_holds_symbolically(omega));
}

TEST_CASE("brackets") {
  const OmegaForm h = OmegaForm::heisenberg();
  CHECK(bracket(h, elem(e1, ints({0})), elem(e2, ints({0}))) == elem(ints({0, 0}), ints({1})));
  CHECK(bracket(h, elem(ints({2, 7}), ints({3})), elem(ints({0, 0}), ints({5}))) == identity_element(h));
  const AlgebraElement a = elem(ints({2, 7}), ints({3}));
  CHECK(bracket(h, a, a) == identity_element(h));
}

TEST_CASE("Maurer-Cartan derivative") {
  const OmegaForm h = OmegaForm::heisenberg();
  CHECK(maurer_cartan_log_derivative(h, identity_element(h), ints({4, -1})) == elem(ints({4, -1}), ints({0})));
  CHECK(maurer_cartan_log_derivative(h, elem(e1, ints({0})), e2) == elem(e2, Vec{make_scalar(1, 2)}));
  const OmegaForm flat(3, 0);
  CHECK(maurer_cartan_log_derivative(flat, elem(ints({1, 2, 3}), {}), ints({0, 1, 0})) == elem(ints({0, 1, 0}), {}));
}

TEST_CASE("Levi tensor examples") {
  const OmegaForm h = OmegaForm::heisenberg();
  SampleStream s(4);
  for (int i = 0; i < 10; ++i) {
    const GroupElement x{s.next_vector(2), s.next_vector(1)};
    CHECK(levi_tensor(h, x, e1, e2) == ints({1}));
    CHECK(levi_tensor(h, x, e2, e2) == ints({0}));
  }
  CHECK(levi_tensor(OmegaForm(3, 0), GroupElement{ints({1, 1, 1}), {}}, ints({1, 0, 0}), ints({0, 1, 0})).empty());
}

TEST_CASE("Levi tensor equals omega at 50 samples per fixture") {
  for (const auto& name : vmrt::testing::isotropic_fixtures()) {
    CAPTURE(name);
    const OmegaForm omega = *vmrt::testing::resolved(name).omega;
    SampleStream s(100);
    for (int i = 0; i < 50; ++i) {
      const GroupElement x = unflatten(omega, s.next_vector(omega.dim_g()));
      const Vec u = s.next_vector(omega.dim_w()), v = s.next_vector(omega.dim_w());
      CHECK(levi_tensor(omega, x, u, v) == omega.apply(u, v));
    }
  }
}

TEST_CASE("associativity is a polynomial identity on every fixture") {
  const auto start = std::chrono::steady_clock::now();
  for (const auto& name : vmrt::testing::isotropic_fixtures()) {
    CAPTURE(name);
    CHECK(associativity_holds_symbolically(*vmrt::testing::resolved(name).omega));
  }
  CHECK(associativity_holds_symbolically(random_omega(10, 5, 1)));
  CHECK(associativity_holds_symbolically(OmegaForm::heisenberg()));
  CHECK(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() < 5.0);
}

TEST_CASE("one-parameter subgroups") {
  const OmegaForm omega = random_omega(5, 3, 6);
  SampleStream s(8);
  for (int i = 0; i < 20; ++i) {
    const Vec w = s.next_vector(5);
    const Scalar a = s.next_scalar(), b = s.next_scalar();
    CHECK(multiply(omega, exp_w(omega, a, w), exp_w(omega, b, w)) == exp_w(omega, a + b, w));
  }
  const GroupElement x{ints({1, 2, 3, 4, 5}), ints({6, 7, 8})};
  CHECK(unflatten(omega, flatten(x)) == x);
}
