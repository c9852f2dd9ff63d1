#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "vmrt/errors.hpp"
#include "vmrt/scalar.hpp"

namespace vmrt {

/// First-order jet: value + sum_i partial_i * eps_i with eps_i * eps_j = 0.
///
/// A jet with fewer partials than another behaves as if padded with zeros, so
/// plain constants (no partials) mix freely with active jets.
class Jet1 {
 public:
  Jet1() = default;
  Jet1(const Scalar& value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Jet1(int value) : value_(value) {}            // NOLINT(google-explicit-constructor)
  Jet1(Scalar value, Vec partials) : value_(std::move(value)), partials_(std::move(partials)) {}

  /// The independent variable number `index` out of `count`, at `value`.
  static Jet1 variable(const Scalar& value, std::size_t index, std::size_t count) {
    Jet1 j(value);
    j.partials_ = unit_vector(count, index);
    return j;
  }

  const Scalar& value() const { return value_; }
  const Vec& partials() const { return partials_; }
  Scalar partial(std::size_t i) const { return i < partials_.size() ? partials_[i] : Scalar(0); }

  Jet1& operator+=(const Jet1& o) {
    value_ += o.value_;
    combine(o, Scalar(1));
    return *this;
  }
  Jet1& operator-=(const Jet1& o) {
    value_ -= o.value_;
    combine(o, Scalar(-1));
    return *this;
  }
  Jet1& operator*=(const Jet1& o) {
    // (a + a'e)(b + b'e) = ab + (a'b + ab')e
    for (auto& p : partials_) p *= o.value_;
    combine(o, value_);
    value_ *= o.value_;
    return *this;
  }
  Jet1& operator/=(const Jet1& o) {
    if (o.value_ == 0) throw Error("Jet1 division by a jet with zero value");
    // (a + a'e)/(b + b'e) = a/b + (a'b - ab')/b^2 e
    const Scalar inv = 1 / o.value_;
    const Scalar q = value_ * inv;
    for (auto& p : partials_) p *= inv;
    combine(o, Scalar(-q * inv));
    value_ = q;
    return *this;
  }

  friend Jet1 operator+(Jet1 a, const Jet1& b) { return a += b; }
  friend Jet1 operator-(Jet1 a, const Jet1& b) { return a -= b; }
  friend Jet1 operator*(Jet1 a, const Jet1& b) { return a *= b; }
  friend Jet1 operator/(Jet1 a, const Jet1& b) { return a /= b; }
  friend Jet1 operator-(Jet1 a) {
    a.value_ = -a.value_;
    for (auto& p : a.partials_) p = -p;
    return a;
  }
  friend Jet1 operator*(const Scalar& s, Jet1 a) {
    a.value_ *= s;
    for (auto& p : a.partials_) p *= s;
    return a;
  }

  friend bool operator==(const Jet1& a, const Jet1& b) {
    if (a.value_ != b.value_) return false;
    const std::size_t n = std::max(a.partials_.size(), b.partials_.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (a.partial(i) != b.partial(i)) return false;
    }
    return true;
  }

 private:
  // partials_ += factor * o.partials_
  void combine(const Jet1& o, const Scalar& factor) {
    if (o.partials_.size() > partials_.size()) partials_.resize(o.partials_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.partials_.size(); ++i) partials_[i] += factor * o.partials_[i];
  }

  Scalar value_{0};
  Vec partials_;
};

using JetVec = std::vector<Jet1>;

inline Vec values_of(const JetVec& v) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].value();
  return out;
}

inline Vec partials_of(const JetVec& v, std::size_t direction) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].partial(direction);
  return out;
}

inline JetVec constant_jets(const Vec& v) { return JetVec(v.begin(), v.end()); }

}  // namespace vmrt
