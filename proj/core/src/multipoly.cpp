#include "vmrt/multipoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace vmrt {

MultiPoly::MultiPoly(const Scalar& constant) {
  if (constant != 0) terms_.emplace(Exponent{}, constant);
}

MultiPoly::MultiPoly(int constant) : MultiPoly(Scalar(constant)) {}

MultiPoly MultiPoly::variable(std::size_t index) {
  Exponent e(index + 1, 0);
  e[index] = 1;
  return monomial(std::move(e), Scalar(1));
}

MultiPoly MultiPoly::monomial(Exponent exponent, const Scalar& coefficient) {
  MultiPoly p;
  p.add_term(std::move(exponent), coefficient);
  return p;
}

void MultiPoly::trim(Exponent& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

void MultiPoly::add_term(Exponent e, const Scalar& c) {
  if (c == 0) return;
  trim(e);
  auto [it, inserted] = terms_.try_emplace(std::move(e), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::size_t MultiPoly::variable_count() const {
  std::size_t n = 0;
  for (const auto& [e, c] : terms_) n = std::max(n, e.size());
  return n;
}

std::uint32_t MultiPoly::total_degree() const {
  std::uint32_t deg = 0;
  for (const auto& [e, c] : terms_) {
    std::uint32_t d = 0;
    for (auto k : e) d += k;
    deg = std::max(deg, d);
  }
  return deg;
}

Scalar MultiPoly::coefficient(const Exponent& exponent) const {
  Exponent e = exponent;
  trim(e);
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar(0) : it->second;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  MultiPoly out;
  for (const auto& [e, c] : terms_) {
    if (var >= e.size() || e[var] == 0) continue;
    Exponent d = e;
    const Scalar factor(static_cast<unsigned long>(d[var]));
    d[var] -= 1;
    out.add_term(std::move(d), Scalar(c * factor));
  }
  return out;
}

MultiPoly MultiPoly::substitute(std::span<const MultiPoly> images) const {
  MultiPoly out;
  for (const auto& [e, c] : terms_) {
    MultiPoly term(c);
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (v >= images.size()) throw std::out_of_range("MultiPoly::substitute: missing image");
      term *= images[v].pow(e[v]);
    }
    out += term;
  }
  return out;
}

MultiPoly MultiPoly::pow(std::uint32_t e) const {
  MultiPoly result(1);
  MultiPoly base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, Scalar(-c));
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      MultiPoly::Exponent e(std::max(ea.size(), eb.size()), 0);
      for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
      for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
      out.add_term(std::move(e), Scalar(ca * cb));
    }
  }
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Scalar& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  // Highest total degree first reads more naturally.
  std::vector<const TermMap::value_type*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(), [](auto* x, auto* y) {
    std::uint32_t dx = 0, dy = 0;
    for (auto k : x->first) dx += k;
    for (auto k : y->first) dy += k;
    return dx > dy;
  });
  for (const auto* t : order) {
    const auto& [e, c] = *t;
    Scalar mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += v < names.size() ? names[v] : "x" + std::to_string(v);
      if (e[v] > 1) mono += "^" + std::to_string(e[v]);
    }
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + "*" + mono;
    }
  }
  return out;
}

}  // namespace vmrt
