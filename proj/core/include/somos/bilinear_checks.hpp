#pragma once

#include "somos/laurent_poly.hpp"
#include "somos/verdict.hpp"

#include <vector>

namespace somos {

struct BTParams {
  LaurentPoly lambda;
  LaurentPoly mu;
  LaurentPoly eta;
};

/// Coupled relations, at every n the lists reach:
///   g_{n+1} f_{n-1} - lambda f_{n+1} g_{n-1} - mu g_n f_n = 0
///   mu f_{n+2} g_{n-1} - eta g_{n+1} f_n - alpha f_{n+1} g_n = 0
VerdictReport check_bt_pair(const std::vector<LaurentPoly>& f, const std::vector<LaurentPoly>& g, const BTParams& bt,
                            const LaurentPoly& alpha);

/// Odd terms eliminated from Somos-5, cross-multiplied, on f_m = S_{2m}:
///   (f_{m-3}f_m - A^2 f_{m-2}f_{m-1})(f_{m-4}f_{m-1} - A^2 f_{m-3}f_{m-2}) = B^2 (f_{m-3}f_{m-1} + A f_{m-2}^2)^2
VerdictReport even_elimination_check(const std::vector<LaurentPoly>& f, const LaurentPoly& alpha_t,
                                     const LaurentPoly& beta_t);

}  // namespace somos
