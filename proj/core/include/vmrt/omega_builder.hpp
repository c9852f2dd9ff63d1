#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "vmrt/matrix.hpp"
#include "vmrt/metabelian.hpp"
#include "vmrt/variety.hpp"

namespace vmrt {

class SaturationNotReached : public Error {
 public:
  using Error::Error;
};

struct OmegaBuildOptions {
  std::uint64_t seed = 42;
  /// Stop once this many consecutive sample points add no rank.
  std::size_t stability_window = 25;
  /// Sample points tried before the grid is doubled (once).
  std::size_t grid_size = 200;
};

/// W' = span of the tangent planes f_a ^ f_b inside the exterior square of W,
/// and omega the quotient projection onto the complement U.
struct OmegaConstruction {
  std::string label;
  std::size_t dim_lambda2 = 0;
  Mat w_prime_basis;  // reduced echelon rows
  std::size_t dim_u = 0;
  /// Coordinates of the exterior square that are not pivots of W'; their unit
  /// vectors form the basis of U, in this order.
  std::vector<std::size_t> complement_coordinates;
  OmegaForm omega;
  /// Rank of the accumulated span after each accepted sample point.
  std::vector<std::size_t> rank_history;
  std::size_t degenerate_skips = 0;
  std::uint64_t seed = 0;

  std::size_t dim_w_prime() const { return w_prime_basis.rows(); }
};

OmegaConstruction build_omega(const VarietyChart& chart, const OmegaBuildOptions& options = {});

/// Quotient projection of the exterior square onto U for a reduced echelon
/// basis of W': z -> z restricted to the complement after eliminating pivots.
Vec project_to_complement(const Mat& w_prime_rref, const std::vector<std::size_t>& pivots,
                          const std::vector<std::size_t>& complement, const Vec& z);

/// (dim Sym^k of an r-dimensional space, dim of its exterior square).
std::pair<std::size_t, std::size_t> symmetric_power_dims(std::size_t r, std::size_t k);

}  // namespace vmrt
