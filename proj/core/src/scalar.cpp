#include "vmrt/scalar.hpp"

#include "vmrt/errors.hpp"

namespace vmrt {

Scalar make_scalar(long numerator, long denominator) {
  if (denominator == 0) {
    throw Error("make_scalar: zero denominator");
  }
  Scalar q(numerator, denominator);
  q.canonicalize();
  return q;
}

std::string to_string(const Scalar& value) { return value.get_str(); }

std::string to_string(const Vec& values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += values[i].get_str();
  }
  out += ")";
  return out;
}

Scalar parse_scalar(std::string_view text) {
  std::string s(text);
  const auto slash = s.find('/');
  auto valid_int = [](const std::string& part) {
    std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (i >= part.size()) return false;
    for (; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') return false;
    }
    return true;
  };
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') {
    throw ParseError("invalid rational literal '" + s + "'");
  }
  mpz_class n(num, 10);
  mpz_class d(den, 10);
  if (d == 0) throw ParseError("zero denominator in '" + s + "'");
  Scalar q(n, d);
  q.canonicalize();
  return q;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

Vec zeros(std::size_t n) { return Vec(n, Scalar(0)); }

Vec unit_vector(std::size_t n, std::size_t index) {
  Vec v = zeros(n);
  v.at(index) = 1;
  return v;
}

Vec operator+(const Vec& a, const Vec& b) {
  require_same_size(a.size(), b.size(), "vector addition");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vec operator-(const Vec& a, const Vec& b) {
  require_same_size(a.size(), b.size(), "vector subtraction");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vec operator-(const Vec& a) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

Vec operator*(const Scalar& s, const Vec& v) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

std::size_t normalize_leftmost(Vec& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) {
      const Scalar inv = 1 / v[i];
      for (auto& x : v) x *= inv;
      return i;
    }
  }
  return v.size();
}

SampleStream::SampleStream(std::uint64_t seed, long bound)
    : seed_(seed), bound_(bound), engine_(static_cast<std::uint_fast32_t>(seed % 2147483646u) + 1u) {}

long SampleStream::next_int(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(static_cast<std::uint64_t>(engine_()) % span);
}

Scalar SampleStream::next_scalar() {
  const long num = next_int(-bound_, bound_);
  const long den = next_int(1, bound_);
  return make_scalar(num, den);
}

Scalar SampleStream::next_nonzero() {
  for (;;) {
    Scalar q = next_scalar();
    if (q != 0) return q;
  }
}

Vec SampleStream::next_vector(std::size_t n) {
  Vec v(n);
  for (auto& x : v) x = next_scalar();
  return v;
}

}  // namespace vmrt
