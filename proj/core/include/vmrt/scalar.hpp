#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace vmrt {

/// Exact rational number. gmpxx keeps values canonical (reduced, positive
/// denominator) after every arithmetic operation.
///
/// gmpxx uses expression templates, so never bind an arithmetic expression to
/// `auto`; name the type.
using Scalar = mpq_class;
using Vec = std::vector<Scalar>;

Scalar make_scalar(long numerator, long denominator = 1);

/// "a" for integers, "a/b" otherwise.
std::string to_string(const Scalar& value);
std::string to_string(const Vec& values);

/// Accepts "a", "-a", "a/b".
Scalar parse_scalar(std::string_view text);

bool is_zero(const Vec& v);
Vec zeros(std::size_t n);
Vec unit_vector(std::size_t n, std::size_t index);

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator-(const Vec& a);
Vec operator*(const Scalar& s, const Vec& v);

/// Scales v so that its leftmost nonzero entry is 1. Returns the index of that
/// entry, or v.size() when v is zero (v is then left unchanged).
std::size_t normalize_leftmost(Vec& v);

/// Deterministic stream of small rationals driven by the standard minimal
/// standard LCG. Numerators lie in [-bound, bound], denominators in [1, bound].
class SampleStream {
 public:
  static constexpr long kDefaultBound = 97;

  explicit SampleStream(std::uint64_t seed, long bound = kDefaultBound);

  std::uint64_t seed() const { return seed_; }

  long next_int(long lo, long hi);
  Scalar next_scalar();
  Scalar next_nonzero();
  Vec next_vector(std::size_t n);

 private:
  std::uint64_t seed_;
  long bound_;
  std::minstd_rand engine_;
};

}  // namespace vmrt
