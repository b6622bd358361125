#pragma once

#include "somos/laurent_poly.hpp"
#include "somos/rat_func.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace somos {

struct InvariantValue {
  RatFunc value;
  std::size_t start = 0;  // index of the window's first term
};

/// T over S_n..S_{n+3}: S_nS_{n+3}/(S_{n+1}S_{n+2}) + alpha(S_{n+1}^2/(S_nS_{n+2}) + S_{n+2}^2/(S_{n+1}S_{n+3}))
/// + beta S_{n+1}S_{n+2}/(S_nS_{n+3}). Window terms must be nonzero.
InvariantValue invariant_T(std::span<const LaurentPoly> window, const LaurentPoly& alpha, const LaurentPoly& beta,
                           std::size_t start = 0);

/// The Somos-5 analogue over five consecutive terms.
InvariantValue invariant_Ttilde(std::span<const LaurentPoly> window, const LaurentPoly& alpha_t,
                                const LaurentPoly& beta_t, std::size_t start = 0);

/// Invariant at windows starting at 0..shifts-1 of `s`.
std::vector<InvariantValue> invariant_T_run(const std::vector<LaurentPoly>& s, const LaurentPoly& alpha,
                                            const LaurentPoly& beta, std::size_t shifts);
std::vector<InvariantValue> invariant_Ttilde_run(const std::vector<LaurentPoly>& s, const LaurentPoly& alpha_t,
                                                 const LaurentPoly& beta_t, std::size_t shifts);

}  // namespace somos
