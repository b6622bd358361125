#pragma once

#include "somos/laurent_poly.hpp"

#include <string>
#include <string_view>

namespace somos {

/// Parse an arithmetic expression over integers, table variables, `+ - * / ^`
/// and parentheses. Exponents are signed integers; `/` is exact division.
/// The canonical text form produced by `to_string()` parses back to the same
/// value. Throws ParseError, UnknownVariable or NotDivisible.
LaurentPoly parse_laurent(std::string_view text, const VarTable& vars = VarTable::standard());

/// As parse_laurent, with the imaginary unit `i` available.
GaussianPoly parse_gaussian_poly(std::string_view text, const VarTable& vars = VarTable::standard());

}  // namespace somos
