#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "vmrt/errors.hpp"
#include "vmrt/scalar.hpp"

namespace vmrt {

// Coordinates on the exterior square of an n-dimensional space are indexed by
// pairs i < j in lexicographic order: (0,1), (0,2), ..., (0,n-1), (1,2), ...

constexpr std::size_t pair_count(std::size_t n) { return n * (n - (n ? 1 : 0)) / 2; }

constexpr std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n) {
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

std::vector<std::pair<std::size_t, std::size_t>> index_pairs(std::size_t n);

/// u ^ v with coordinate (i,j) equal to u_i v_j - u_j v_i.
template <class R>
std::vector<R> wedge(const std::vector<R>& u, const std::vector<R>& v) {
  require_same_size(u.size(), v.size(), "wedge");
  const std::size_t n = u.size();
  std::vector<R> out;
  out.reserve(pair_count(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) out.push_back(u[i] * v[j] - u[j] * v[i]);
  return out;
}

inline Vec wedge(const Vec& u, const Vec& v) { return wedge<Scalar>(u, v); }

/// Grassmann-Plücker quadratic relations for a decomposable 2-vector:
/// p_ij p_kl - p_ik p_jl + p_il p_jk for every i < j < k < l. Returns the
/// first nonzero value, or zero when all relations hold.
Scalar first_pluecker_violation(const Vec& p, std::size_t n);

}  // namespace vmrt
