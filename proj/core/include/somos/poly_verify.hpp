#pragma once

#include "somos/laurent_poly.hpp"
#include "somos/verdict.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace somos {

enum class PolySystem { Somos4, Somos5 };

/// A recurrence whose terms should all be polynomials in `vars`.
struct PolyCase {
  std::string name;
  PolySystem system = PolySystem::Somos4;
  std::vector<LaurentPoly> init;  // 4 or 5 values
  LaurentPoly alpha;              // alpha, or alpha_t for Somos-5
  LaurentPoly beta;               // beta, or beta_t
  std::vector<std::string> vars;
  std::size_t backward = 0;  // also check this many terms before S_0
};

/// Initial patterns 1,x,w,y / x,1,w,y / x,w,1,y / x,w,y,1 with alpha = beta = xyzw.
std::vector<PolyCase> somos4_poly_cases();
/// The ten Somos-5 patterns with alpha_t = beta_t = xyzw.
std::vector<PolyCase> somos5_poly_cases();
/// Initial values x,1,1,y with alpha = beta = xyz, checked one step backwards too.
PolyCase somos4_xyz_case();

/// Terms S_0..S_n (and the backward ones) of `c`.
std::vector<LaurentPoly> poly_case_terms(const PolyCase& c, std::size_t n);

/// Every term polynomial in c.vars; the first offender is the witness.
VerdictReport verify_polynomial_case(const PolyCase& c, std::size_t n);

/// det of the root-table Hankel entries equals S_k of the xyz case (shifted so
/// that S_{-2} = x) for 1 <= k <= n.
VerdictReport corollary_determinant_check(std::size_t n);

/// Testable consequences of the strong Laurent theorems: denominators of the
/// symbolic run stay in the initial-value variables, and the invariant
/// combination (beta T, alpha^2 + beta T; or alpha_t T~, beta_t + alpha_t T~)
/// is polynomial for every polynomial case.
VerdictReport strong_laurent_consequence_check(PolySystem system, std::size_t n);

struct CoprimalityVerdict {
  enum class Outcome { ProbablyCoprime, NotCoprime, Inconclusive };
  Outcome outcome = Outcome::Inconclusive;
  std::string witness;  // common factor for NotCoprime, reason otherwise
  std::size_t trials = 0;
};

/// Hypothesis-level check that polynomials share no common factor.
/// NotCoprime is returned only with a factor verified by exact division
/// (monomial content or a linear v - c). Otherwise, for each variable the
/// values are specialized at seeded random points in the other variables and
/// their univariate gcd is taken; a trivial gcd for every variable gives
/// ProbablyCoprime. Deterministic for a given seed.
CoprimalityVerdict gcd_probe(const std::vector<LaurentPoly>& values, std::size_t trials, std::uint64_t seed);

std::string_view to_string(CoprimalityVerdict::Outcome o) noexcept;

}  // namespace somos
