#include "somos/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace somos {

namespace {

const VarTable& table_of(const TruncatedSeries& s) {
  static const VarTable standard = VarTable::standard();
  return s.precision() ? s[0].vars() : standard;
}

// polynomial in t given by its first coefficients, padded with zeros to n
TruncatedSeries padded(std::vector<LaurentPoly> head, std::size_t n, const VarTable& vars) {
  head.resize(n, LaurentPoly(vars));
  return TruncatedSeries(std::move(head));
}

}  // namespace

TruncatedSeries TruncatedSeries::zero(std::size_t n, const VarTable& vars) {
  return TruncatedSeries(std::vector<LaurentPoly>(n, LaurentPoly(vars)));
}

std::size_t TruncatedSeries::valuation() const noexcept {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) return i;
  return coeffs_.size();
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  std::size_t n = std::min(a.precision(), b.precision());
  std::vector<LaurentPoly> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(a[i] + b[i]);
  return TruncatedSeries(std::move(out));
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  std::size_t n = std::min(a.precision(), b.precision());
  std::vector<LaurentPoly> out;
  out.reserve(n);
  for (std::size_t m = 0; m < n; ++m) {
    std::vector<LaurentPoly> parts;
    for (std::size_t k = 0; k <= m; ++k)
      if (!a[k].is_zero() && !b[m - k].is_zero()) parts.push_back(a[k] * b[m - k]);
    out.push_back(sum(parts, table_of(a)));
  }
  return TruncatedSeries(std::move(out));
}

TruncatedSeries inverse(const TruncatedSeries& s) {
  std::size_t n = s.precision();
  if (n == 0) return s;
  if (!s[0].is_monomial()) throw std::domain_error("series inverse: constant term is not a unit");
  LaurentPoly unit = s[0];
  std::vector<LaurentPoly> out;
  out.reserve(n);
  out.push_back(exact_div(LaurentPoly(Rational(1), unit.vars()), unit));
  for (std::size_t m = 1; m < n; ++m) {
    std::vector<LaurentPoly> parts;
    for (std::size_t k = 1; k <= m; ++k)
      if (!s[k].is_zero() && !out[m - k].is_zero()) parts.push_back(s[k] * out[m - k]);
    out.push_back(exact_div(-sum(parts, unit.vars()), unit));
  }
  return TruncatedSeries(std::move(out));
}

TruncatedSeries series_compose_fe(const FunctionalEquationData& fe, std::size_t n) {
  const VarTable& vars = fe.a.vars();
  if (n == 0) return TruncatedSeries{};
  LaurentPoly one(Rational(1), vars);
  LaurentPoly zero(vars);
  TruncatedSeries numer = padded({fe.a, fe.b}, n, vars);
  TruncatedSeries lin = padded({one, fe.c, fe.d}, n, vars);
  TruncatedSeries quad = padded({zero, zero, fe.e, fe.f}, n, vars);

  TruncatedSeries q = TruncatedSeries::zero(n, vars);
  for (std::size_t round = 0; round <= n + 1; ++round) {
    TruncatedSeries next = numer * inverse(lin + quad * q);
    if (next == q) return q;
    q = std::move(next);
  }
  throw std::logic_error("series_compose_fe: iteration did not stabilize");
}

LaurentPoly fe_next_coefficient(const FunctionalEquationData& fe, const std::vector<LaurentPoly>& q) {
  const std::size_t m = q.size();
  const VarTable& vars = fe.a.vars();
  std::vector<LaurentPoly> parts;
  if (m == 0) return fe.a;
  if (m == 1) parts.push_back(fe.b);
  if (m >= 1 && !fe.c.is_zero()) parts.push_back(-(fe.c * q[m - 1]));
  if (m >= 2 && !fe.d.is_zero()) parts.push_back(-(fe.d * q[m - 2]));
  auto convolution = [&](std::size_t top) {
    std::vector<LaurentPoly> terms;
    for (std::size_t k = 0; k <= top; ++k) terms.push_back(q[k] * q[top - k]);
    return sum(terms, vars);
  };
  if (m >= 2 && !fe.e.is_zero()) parts.push_back(-(fe.e * convolution(m - 2)));
  if (m >= 3 && !fe.f.is_zero()) parts.push_back(-(fe.f * convolution(m - 3)));
  return sum(parts, vars);
}

TruncatedSeries fe_residual(const FunctionalEquationData& fe, const TruncatedSeries& q) {
  const std::size_t n = q.precision();
  const VarTable& vars = fe.a.vars();
  LaurentPoly one(Rational(1), vars);
  LaurentPoly zero(vars);
  TruncatedSeries lin = padded({one, fe.c, fe.d}, n, vars);
  TruncatedSeries quad = padded({zero, zero, fe.e, fe.f}, n, vars);
  TruncatedSeries numer = padded({-fe.a, -fe.b}, n, vars);
  return q * lin + quad * q * q + numer;
}

}  // namespace somos
