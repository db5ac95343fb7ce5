#pragma once

#include <string>
#include <string_view>

#include "cmult/xpoly.hpp"

namespace cmult {

/// Comma-separated ascending coefficients "c0,c1,...,cn"; each entry is an
/// integer or a fraction "p/q". Throws std::invalid_argument on bad input.
NumPoly parse_coefficients(std::string_view text);

/// Expression over x, a0..a15, integers, + - * ^ and parentheses.
/// Throws std::invalid_argument on bad input.
SymPoly parse_expression(std::string_view text);

/// Expression that must not mention any parameter.
NumPoly parse_numeric_expression(std::string_view text);

/// Formats ascending coefficients in the parse_coefficients grammar.
std::string format_coefficients(const NumPoly& p);

}  // namespace cmult
