#pragma once

#include "fanocfg/mpoly.hpp"

#include <span>
#include <string>
#include <string_view>

namespace fanocfg {

/// Parses the polynomial text grammar
///
///   poly   := term (('+'|'-') term)*
///   term   := [coeff '*'] factor ('*' factor)* | coeff
///   factor := var ['^' posint]
///   coeff  := ['-'] int ['/' posint]
///   var    := 'x' digit
///
/// Whitespace is ignored everywhere. A leading '-' may also precede a term
/// without a coefficient ("-x1^2 + x2"). Variables are looked up in
/// `variables` (e.g. {"x1", ..., "x5"}); the result has that many variables.
QPoly parse_poly(std::string_view text, std::span<const std::string> variables);

/// Convenience overload with variables x1..xn.
QPoly parse_poly(std::string_view text, std::size_t nvars);

/// Canonical text: degrevlex-descending terms, coefficients as integers or
/// a/b, unit coefficients omitted, explicit '*' and '^', " + " / " - "
/// separators. The zero polynomial prints as "0". Round-trips through
/// parse_poly.
std::string to_string(const QPoly& p);

/// Rational polynomials print via the grammar; other coefficients are
/// wrapped in parentheses using the `z` notation of CycloElem::to_string.
std::string to_string(const CycloPoly& p);

} // namespace fanocfg
