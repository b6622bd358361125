#pragma once

#include "somos/laurent_poly.hpp"

#include <string>
#include <string_view>

namespace somos {

// Exchange format:
//   {"vars":["r","x",...],"terms":[{"e":[0,0,1,0,0,0,0],"c":"1"}, ...]}
// Terms appear in canonical (graded-lex descending) order; "c" is "p", "p/q"
// or, for Gaussian coefficients, "p/q+p'/q'i".

std::string to_json(const LaurentPoly& p);
std::string to_json(const GaussianPoly& p);

/// Throws ParseError on malformed input; the variable table is rebuilt from
/// "vars" (the standard or root table instance is reused when it matches).
LaurentPoly laurent_from_json(std::string_view text);
GaussianPoly gaussian_from_json(std::string_view text);

}  // namespace somos
