#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vmrt/variety.hpp"

namespace vmrt {

struct VerifyOptions {
  std::uint64_t seed = 42;
  std::size_t samples = 100;
  /// Empty runs every check.
  std::vector<std::string> checks;
  unsigned jobs = 1;
};

struct CheckResult {
  std::string name;
  std::size_t samples = 0;
  std::size_t passes = 0;
  std::size_t skips = 0;
  std::size_t failures = 0;
  /// Named tallies, e.g. resamples or sub-check counts.
  std::map<std::string, std::size_t> details;
  /// Up to three failure descriptions, lowest sample index first.
  std::vector<std::string> witness;
  double seconds = 0;

  bool passed() const { return failures == 0 && passes > 0; }
};

struct GoldenDims {
  std::size_t dim_w = 0;
  std::size_t dim_u = 0;
  std::optional<std::size_t> dim_w_prime;  // only when omega was constructed
  std::size_t d = 0;
  std::size_t n = 0;
  std::optional<std::size_t> family_dim;   // only when family_dimension ran
};

struct VerificationReport {
  std::string label;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::string omega_source;  // "built" or "explicit"
  GoldenDims dims;
  std::vector<CheckResult> checks;
  double seconds = 0;

  bool passed() const;
};

/// Check names in execution order.
const std::vector<std::string>& check_names();

/// Throws ParseError for an unknown check name.
VerificationReport run_verification(const VarietySpec& spec, const VerifyOptions& options);

/// Deterministic per-sample seed, independent of job count.
std::uint64_t sample_seed(std::uint64_t seed, const std::string& check, std::size_t index);

/// Timings are left out unless asked for so that equal inputs give equal bytes.
std::string report_to_json(const VerificationReport& report, bool include_timing = false);
std::string report_to_text(const VerificationReport& report);

}  // namespace vmrt
