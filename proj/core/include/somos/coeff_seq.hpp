#pragma once

#include "somos/laurent_poly.hpp"
#include "somos/series.hpp"

#include <memory>
#include <string_view>
#include <utility>
#include <vector>

namespace somos {

enum class SeqKind { Somos4P, Somos5P, Somos5Q, A1QP, SeriesDerived };

std::string_view to_string(SeqKind k) noexcept;

/// p_m = c1 p_{m-1} + c2 p_{m-2} + sum_{k=sum_from}^{m-lag} p_k p_{m-lag-k}, m >= 2.
struct ConvolutionRule {
  LaurentPoly c1;
  LaurentPoly c2;
  int lag = 2;
  int sum_from = 0;
};

/// Lazily extended coefficient sequence. Copies share one cache; extension
/// is serialized internally, so any number of threads may read.
class CoeffSeq {
 public:
  static CoeffSeq convolution(SeqKind kind, LaurentPoly p0, LaurentPoly p1, ConvolutionRule rule);
  /// Coefficients of the series solving the functional equation `fe`.
  static CoeffSeq from_series(FunctionalEquationData fe);

  SeqKind kind() const noexcept;
  const VarTable& vars() const noexcept;

  LaurentPoly term(std::size_t m) const;
  /// Terms 0..n-1.
  std::vector<LaurentPoly> prefix(std::size_t n) const;
  std::size_t computed() const;

 private:
  struct State;
  std::shared_ptr<State> state_;
};

/// Hankel entries for Somos-4 with S_{-1} = S_0 = 1, S_1 = x, S_2 = y,
/// alpha = sqrt_alpha^2. x, y and sqrt_alpha must be monomials.
CoeffSeq somos4_entries(const LaurentPoly& x, const LaurentPoly& y, const LaurentPoly& beta,
                        const LaurentPoly& sqrt_alpha);

/// (p, q) for Somos-5 with initial values 1, 1, x, y, z.
std::pair<CoeffSeq, CoeffSeq> somos5_entries(const LaurentPoly& x, const LaurentPoly& y, const LaurentPoly& z,
                                             const LaurentPoly& alpha_t, const LaurentPoly& beta_t);

/// Hankel entries for the extended A1 Q-system with initial values 1, x.
CoeffSeq a1q_entries(const LaurentPoly& x, const LaurentPoly& beta);
/// Same sequence from the (beta + 1)/x recurrence summed from k = 1.
CoeffSeq a1q_entries_alt(const LaurentPoly& x, const LaurentPoly& beta);

/// Entries whose Hankel determinants give the Somos-4 polynomials with
/// initial values x, 1, 1, y and alpha = beta = xyz. Lives on the table with
/// the root symbol s, s^2 = xyz.
CoeffSeq corollary_entries();

struct FamilyParams {
  int k = 1;  // +1 or -1
  LaurentPoly f0;
};

/// Functional-equation data of the one-parameter family of generating
/// functions for Somos-4 (initial values as in somos4_entries).
FunctionalEquationData somos4_family_initials(const LaurentPoly& x, const LaurentPoly& y,
                                              const LaurentPoly& beta, const LaurentPoly& sqrt_alpha,
                                              const FamilyParams& fam);

/// The base member of the family, written out directly.
FunctionalEquationData somos4_initials(const LaurentPoly& x, const LaurentPoly& y, const LaurentPoly& beta,
                                       const LaurentPoly& sqrt_alpha);

/// Data for G with H_n(F) = x^n H_{n-1}(G), F the A1 Q-system generating function.
FunctionalEquationData a1q_shift_initials(const LaurentPoly& x, const LaurentPoly& beta);

}  // namespace somos
