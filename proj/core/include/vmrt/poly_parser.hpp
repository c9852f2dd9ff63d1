#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "vmrt/multipoly.hpp"

namespace vmrt {

/// Parses a polynomial with rational coefficients over the named variables.
///
/// Grammar: integers, rational literals a/b, variable names, + - * ^ and
/// parentheses. Division is only allowed by a nonzero constant. Variable i of
/// the result corresponds to variables[i]. Throws ParseError.
MultiPoly parse_polynomial(std::string_view text, const std::vector<std::string>& variables);

}  // namespace vmrt
