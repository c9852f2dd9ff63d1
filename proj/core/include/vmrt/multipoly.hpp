#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "vmrt/scalar.hpp"

namespace vmrt {

/// Sparse multivariate polynomial over the rationals.
///
/// Exponent vectors are stored with trailing zeros trimmed, so polynomials in
/// different numbers of variables combine without explicit promotion. Zero
/// coefficients are never stored.
class MultiPoly {
 public:
  using Exponent = std::vector<std::uint32_t>;
  using TermMap = std::map<Exponent, Scalar>;

  MultiPoly() = default;
  MultiPoly(const Scalar& constant);  // NOLINT(google-explicit-constructor)
  MultiPoly(int constant);            // NOLINT(google-explicit-constructor)

  static MultiPoly variable(std::size_t index);
  static MultiPoly monomial(Exponent exponent, const Scalar& coefficient);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  /// One past the highest variable index that occurs.
  std::size_t variable_count() const;
  std::uint32_t total_degree() const;
  /// Coefficient of the given monomial (zero when absent).
  Scalar coefficient(const Exponent& exponent) const;

  MultiPoly derivative(std::size_t var) const;

  /// Evaluates at a point over any commutative ring constructible from Scalar.
  template <class R>
  R evaluate(std::span<const R> point) const;
  Scalar evaluate(std::span<const Scalar> point) const { return evaluate<Scalar>(point); }

  /// Replaces variable i by images[i].
  MultiPoly substitute(std::span<const MultiPoly> images) const;

  /// Human-readable form using the given variable names (x0, x1, ... when
  /// names run out).
  std::string to_string(const std::vector<std::string>& names = {}) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Scalar& s);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const Scalar& s, MultiPoly a) { return a *= s; }
  friend MultiPoly operator*(long s, MultiPoly a) { return a *= Scalar(s); }
  friend MultiPoly operator-(MultiPoly a) { return a *= Scalar(-1); }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

  MultiPoly pow(std::uint32_t e) const;

 private:
  static void trim(Exponent& e);
  void add_term(Exponent e, const Scalar& c);

  TermMap terms_;
};

using PolyVec = std::vector<MultiPoly>;

template <class R>
R MultiPoly::evaluate(std::span<const R> point) const {
  // Cache integer powers per variable; exponents are small in practice.
  std::vector<std::vector<R>> powers(point.size());
  auto power = [&](std::size_t var, std::uint32_t e) -> const R& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(R(Scalar(1)));
    while (cache.size() <= e) cache.push_back(cache.back() * point[var]);
    return cache[e];
  };
  R total = R(Scalar(0));
  for (const auto& [exponent, coeff] : terms_) {
    R term = R(coeff);
    for (std::size_t v = 0; v < exponent.size(); ++v) {
      if (exponent[v] == 0) continue;
      if (v >= point.size()) {
        throw std::out_of_range("MultiPoly::evaluate: point has too few coordinates");
      }
      term = term * power(v, exponent[v]);
    }
    total = total + term;
  }
  return total;
}

template <class R>
std::vector<R> evaluate_all(const PolyVec& polys, std::span<const R> point) {
  std::vector<R> out;
  out.reserve(polys.size());
  for (const auto& p : polys) out.push_back(p.template evaluate<R>(point));
  return out;
}

}  // namespace vmrt
