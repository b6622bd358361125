#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace somos {

/// Arbitrary-precision rational; mpq_class keeps gcd(num, den) = 1 and den > 0.
using Rational = mpq_class;
using Integer = mpz_class;

/// Gaussian rational re + im*i. Canonical when both parts are.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}  // NOLINT: implicit embedding
  GaussianRational(long v) : re(v) {}                 // NOLINT
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussianRational imaginary_unit() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_one() const { return re == 1 && sgn(im) == 0; }
  GaussianRational conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

// Coefficient-field helpers shared by both coefficient types.
inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const GaussianRational& q) { return q.is_zero(); }
inline bool is_one(const Rational& q) { return q == 1; }
inline bool is_one(const GaussianRational& q) { return q.is_one(); }

/// "p" or "p/q".
std::string to_string(const Rational& q);
/// "re" when im = 0, else "re+imi" / "re-imi" with each part as "p" or "p/q".
std::string to_string(const GaussianRational& q);

Rational parse_rational(std::string_view text);
GaussianRational parse_gaussian(std::string_view text);

/// Exact power with signed exponent; throws std::domain_error on 0^negative.
Rational pow(const Rational& base, long exponent);
GaussianRational pow(const GaussianRational& base, long exponent);

/// Exact square root when q is the square of a rational.
bool rational_sqrt(const Rational& q, Rational& root);

}  // namespace somos
