#pragma once

#include <somos/hankel.hpp>
#include <somos/laurent_poly.hpp>
#include <somos/text_io.hpp>

#include <random>
#include <string_view>

namespace somos::test {

inline LaurentPoly P(std::string_view text) { return parse_laurent(text); }
inline LaurentPoly C(long v) { return LaurentPoly(Rational(v)); }
inline LaurentPoly V(std::string_view name) { return LaurentPoly::variable(name); }

/// Up to `max_terms` terms in x, y, b with exponents in [-2, 3] and small
/// rational coefficients. May be zero.
inline LaurentPoly random_poly(std::mt19937_64& rng, int max_terms = 4) {
  std::uniform_int_distribution<int> nterms(1, max_terms), expo(-2, 3), num(-5, 5), den(1, 3);
  std::vector<LaurentPoly::Term> terms;
  const int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    Monomial m;
    m.e[1] = static_cast<std::int16_t>(expo(rng));  // x
    m.e[2] = static_cast<std::int16_t>(expo(rng));  // y
    m.e[5] = static_cast<std::int16_t>(expo(rng) / 2);  // b
    Rational c(num(rng), den(rng));
    c.canonicalize();
    terms.push_back({m, c});
  }
  return LaurentPoly::from_terms(std::move(terms));
}

inline LaurentPoly random_nonzero_poly(std::mt19937_64& rng, int max_terms = 4) {
  for (;;) {
    LaurentPoly p = random_poly(rng, max_terms);
    if (!p.is_zero()) return p;
  }
}

inline PolyMatrix random_matrix(std::mt19937_64& rng, std::size_t n, int max_terms = 2) {
  PolyMatrix m(n, LaurentPoly());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = random_poly(rng, max_terms);
  return m;
}

}  // namespace somos::test
