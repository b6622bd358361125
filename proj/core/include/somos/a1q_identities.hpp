#pragma once

#include "somos/laurent_poly.hpp"
#include "somos/verdict.hpp"

#include <vector>

namespace somos {

/// (x^2 + 1 + beta)/x, the three-term coefficient for initial values 1, x.
LaurentPoly a1q_three_term_coefficient(const LaurentPoly& x, const LaurentPoly& beta);

/// x S_n = (x^2 + 1 + beta) S_{n-1} - x S_{n-2} for 2 <= n < s.size().
VerdictReport a1q_three_term_check(const std::vector<LaurentPoly>& s, const LaurentPoly& x, const LaurentPoly& beta);

/// The Somos-4 relation every such sequence obeys, times x^2:
///   x^2 S_{n+2}S_{n-2} = c^2 S_{n+1}S_{n-1} + (x^2 - c^2) S_n^2, c = x^2 + 1 + beta.
VerdictReport a1q_somos4_embedding_check(const std::vector<LaurentPoly>& s, const LaurentPoly& x,
                                         const LaurentPoly& beta);

/// f_n = g^n S_n with g = gamma^{1/2} supplied by the caller.
std::vector<GaussianPoly> scaled_a1q(const std::vector<GaussianPoly>& s, const GaussianPoly& gamma_half);

/// f_n f_{n-2} - f_{n-1}^2 - beta gamma^{n-1} for 2 <= n < f.size().
VerdictReport scaled_a1q_check(const std::vector<GaussianPoly>& f, const GaussianPoly& beta,
                               const GaussianPoly& gamma_half);

}  // namespace somos
