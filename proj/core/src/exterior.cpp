#include "vmrt/exterior.hpp"

namespace vmrt {

std::vector<std::pair<std::size_t, std::size_t>> index_pairs(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(pair_count(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) out.emplace_back(i, j);
  return out;
}

Scalar first_pluecker_violation(const Vec& p, std::size_t n) {
  require_same_size(p.size(), pair_count(n), "Plücker vector");
  auto at = [&](std::size_t a, std::size_t b) -> const Scalar& { return p[pair_index(a, b, n)]; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        for (std::size_t l = k + 1; l < n; ++l) {
          const Scalar r = at(i, j) * at(k, l) - at(i, k) * at(j, l) + at(i, l) * at(j, k);
          if (r != 0) return r;
        }
  return Scalar(0);
}

}  // namespace vmrt
