#pragma once

#include "somos/laurent_poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace somos {

/// Quotient of Laurent polynomials with a factored denominator.
///
/// Denominator factors are normalized (no monomial content, leading
/// coefficient 1); monomials and constants are units and live in the
/// numerator. After every operation the numerator is trial-divided by each
/// factor, so cancellation is complete whenever the true denominator is a
/// product of the recorded factors. No multivariate gcd is computed.
class RatFunc {
 public:
  struct Factor {
    LaurentPoly poly;
    int multiplicity = 1;
  };

  RatFunc() = default;
  RatFunc(LaurentPoly p);  // NOLINT(google-explicit-constructor): Laurent polys embed
  explicit RatFunc(VarTable vars) : num_(std::move(vars)) {}

  static RatFunc fraction(const LaurentPoly& num, const LaurentPoly& den);

  const VarTable& vars() const noexcept { return num_.vars(); }
  const LaurentPoly& numerator() const noexcept { return num_; }
  const std::vector<Factor>& denominator_factors() const noexcept { return den_; }
  LaurentPoly denominator() const;

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_laurent() const noexcept { return den_.empty(); }
  std::optional<LaurentPoly> as_laurent() const;

  RatFunc inverse() const;
  /// Same value with every denominator factor divisible by an element of
  /// `base` split at that element, then re-reduced. `base` entries should be
  /// normalized factors such as those of another RatFunc.
  RatFunc refined(const std::vector<LaurentPoly>& base) const;
  RatFunc pow(unsigned k) const;

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

  /// Value equality by cross-multiplication.
  friend bool operator==(const RatFunc& a, const RatFunc& b);

  /// `num` when the denominator is a unit, else `(num) / (den)`.
  std::string to_string() const;

 private:
  LaurentPoly num_;
  std::vector<Factor> den_;

  void reduce();
  void add_factor(LaurentPoly g, int multiplicity);
};

}  // namespace somos
