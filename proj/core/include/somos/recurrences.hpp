#pragma once

#include "somos/laurent_poly.hpp"
#include "somos/verdict.hpp"

#include <array>
#include <optional>
#include <utility>
#include <vector>

namespace somos {

/// S_n S_{n-4} = alpha S_{n-1} S_{n-3} + beta S_{n-2}^2.
struct SomosParams {
  LaurentPoly alpha;
  LaurentPoly beta;
  std::array<LaurentPoly, 4> init;
};

/// S_n S_{n-5} = alpha_t S_{n-1} S_{n-4} + beta_t S_{n-2} S_{n-3}.
struct Somos5Params {
  LaurentPoly alpha_t;
  LaurentPoly beta_t;
  std::array<LaurentPoly, 5> init;
};

/// S_n S_{n-2} = S_{n-1}^2 + beta.
struct A1QParams {
  LaurentPoly beta;
  std::array<LaurentPoly, 2> init;
  std::optional<LaurentPoly> gamma;
};

/// Terms S_0..S_n. Every division is checked; failure throws SequenceError
/// carrying the offending index.
std::vector<LaurentPoly> somos4_seq(const SomosParams& p, std::size_t n);
std::vector<LaurentPoly> somos5_seq(const Somos5Params& p, std::size_t n);
std::vector<LaurentPoly> a1q_seq(const A1QParams& p, std::size_t n);

/// Terms S_{-count}..S_{-1}, running the recurrence backwards.
std::vector<LaurentPoly> somos4_backward(const SomosParams& p, std::size_t count);
std::vector<LaurentPoly> somos5_backward(const Somos5Params& p, std::size_t count);

/// S_n S_{n-4} - alpha S_{n-1} S_{n-3} - beta S_{n-2}^2 at every n >= 4.
VerdictReport somos4_residual_check(const std::vector<LaurentPoly>& s, const LaurentPoly& alpha,
                                    const LaurentPoly& beta);
VerdictReport somos5_residual_check(const std::vector<LaurentPoly>& s, const LaurentPoly& alpha_t,
                                    const LaurentPoly& beta_t);

/// ([s0, s2, ...], [s1, s3, ...]).
std::pair<std::vector<LaurentPoly>, std::vector<LaurentPoly>> split_even_odd(const std::vector<LaurentPoly>& s);
std::vector<LaurentPoly> merge_even_odd(const std::vector<LaurentPoly>& even, const std::vector<LaurentPoly>& odd);

/// Somos-4 coefficients satisfied by both halves of the Somos-5 run with
/// initial values 1, 1, x, y, z. `init` holds the first four even terms.
SomosParams induced_somos4_params(const LaurentPoly& x, const LaurentPoly& y, const LaurentPoly& z,
                                  const LaurentPoly& alpha_t, const LaurentPoly& beta_t);

}  // namespace somos
