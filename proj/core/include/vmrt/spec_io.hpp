#pragma once

#include <string>
#include <string_view>

#include "vmrt/omega_builder.hpp"
#include "vmrt/variety.hpp"

namespace vmrt {

inline constexpr std::string_view kBuiltinPrefix = "builtin:";

/// {label, variables: [names], coordinates: [polynomials], omega?: {dimU, entries}}.
/// Omega entries are {i, j, uVector} with 0-based W indices; uVector components
/// are integers or rational strings "a/b". Throws ParseError.
VarietySpec parse_variety_spec(std::string_view json_text);

/// Standalone {dimU, entries: [...]} table for a given dim W. Throws ParseError.
OmegaForm parse_omega(std::string_view json_text, std::size_t dim_w);

/// "builtin:<name>" resolves the fixture catalog, anything else is a file path.
VarietySpec load_variety_spec(const std::string& source);

/// Nonzero entries with i < j, in the format accepted by parse_omega.
std::string omega_to_json(const OmegaForm& omega, int indent = 2);

/// {label, dimW, dimLambda2, dimWprime, dimU, seed, wPrimeBasis, complement, omegaTable}.
std::string construction_to_json(const OmegaConstruction& c, int indent = 2);

}  // namespace vmrt
