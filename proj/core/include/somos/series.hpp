#pragma once

#include "somos/laurent_poly.hpp"

#include <cstddef>
#include <vector>

namespace somos {

/// Power series in t with Laurent-polynomial coefficients, known modulo t^N.
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  explicit TruncatedSeries(std::vector<LaurentPoly> coeffs) : coeffs_(std::move(coeffs)) {}
  /// Zero series of precision n.
  static TruncatedSeries zero(std::size_t n, const VarTable& vars);

  std::size_t precision() const noexcept { return coeffs_.size(); }
  const LaurentPoly& operator[](std::size_t i) const { return coeffs_.at(i); }
  const std::vector<LaurentPoly>& coeffs() const noexcept { return coeffs_; }

  /// Index of the first nonzero coefficient; precision() if none.
  std::size_t valuation() const noexcept;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<LaurentPoly> coeffs_;
};

/// Sum and product truncated to the smaller precision.
TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

/// Multiplicative inverse; the constant term must be a monomial unit.
TruncatedSeries inverse(const TruncatedSeries& s);

/// Coefficients of Q = (a + b t) / (1 + c t + d t^2 + t^2 (e + f t) Q).
struct FunctionalEquationData {
  LaurentPoly a, b, c, d, e, f;
  friend bool operator==(const FunctionalEquationData&, const FunctionalEquationData&) = default;
};

/// Solution modulo t^n by t-adic fixed-point iteration, stopping once two
/// consecutive iterates agree (at most n + 1 rounds).
TruncatedSeries series_compose_fe(const FunctionalEquationData& fe, std::size_t n);

/// Coefficient m of the same solution by the triangular recurrence obtained
/// from Q(1 + c t + d t^2) + t^2 (e + f t) Q^2 = a + b t. Needs q_0..q_{m-1}.
LaurentPoly fe_next_coefficient(const FunctionalEquationData& fe, const std::vector<LaurentPoly>& q);

/// Q(1 + c t + d t^2) + t^2 (e + f t) Q^2 - (a + b t), modulo t^precision(q).
TruncatedSeries fe_residual(const FunctionalEquationData& fe, const TruncatedSeries& q);

}  // namespace somos
