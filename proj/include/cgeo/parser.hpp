#ifndef CGEO_PARSER_HPP
#define CGEO_PARSER_HPP

#include <string>

#include "cgeo/scalar.hpp"

namespace cgeo {

/// Parses the engine's expression grammar into a canonical Scalar.
///
/// Grammar: infix +, -, *, /, ^ with precedence ^ > unary minus > */ > +-,
/// left-associative; integer literals; chart coordinate names; parentheses.
/// Exponents must evaluate to nonnegative integer constants. Rational
/// literals like 1/2 come out of ordinary division.
///
/// Throws ParseError with a byte position on malformed input, unknown
/// identifiers and syntactically zero divisors.
Scalar parse_scalar(const std::string& text, const ChartPtr& chart);

} // namespace cgeo

#endif
