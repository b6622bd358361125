#pragma once

#include <somos/laurent_poly.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace somos::cli {

/// Expression over the standard variable table; throws ParseError or
/// UnknownVariable.
LaurentPoly parse_expression(std::string_view text);

/// Comma-separated expressions.
std::vector<LaurentPoly> parse_list(std::string_view text);

/// m with m^2 = p, for p a monomial with a square coefficient and even
/// exponents; nullopt otherwise.
std::optional<LaurentPoly> monomial_sqrt(const LaurentPoly& p);

/// Symbol values the verification suites are built from. Defaults are the
/// free variables; beta and beta_t both default to b, alpha_t to a, and
/// sqrt_alpha to r.
struct Symbols {
  LaurentPoly x, y, z, w;
  LaurentPoly sqrt_alpha;
  LaurentPoly beta;
  LaurentPoly alpha_t;
  LaurentPoly beta_t;

  static Symbols symbolic();
  LaurentPoly alpha() const { return sqrt_alpha * sqrt_alpha; }
  /// Set x, y, z or w from `name=expr`; throws ParseError otherwise.
  void bind(std::string_view assignment);
};

}  // namespace somos::cli
