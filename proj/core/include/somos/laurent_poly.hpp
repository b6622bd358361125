#pragma once

#include "somos/monomial.hpp"
#include "somos/rational.hpp"
#include "somos/var_table.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace somos {

/// Multivariate Laurent polynomial in canonical form.
///
/// Terms are kept strictly descending in graded-lex order with no zero
/// coefficients, so two equal values are equal term by term. All operations
/// return new values; nothing mutates shared state, so values may be read
/// from any number of threads.
template <class C>
class BasicLaurentPoly {
 public:
  using Coeff = C;

  struct Term {
    Monomial mono;
    C coeff;
    friend bool operator==(const Term& a, const Term& b) {
      return a.mono == b.mono && a.coeff == b.coeff;
    }
  };

  BasicLaurentPoly() = default;
  explicit BasicLaurentPoly(VarTable vars) : vars_(std::move(vars)) {}
  explicit BasicLaurentPoly(const C& constant, VarTable vars = {});
  explicit BasicLaurentPoly(long constant, VarTable vars = {})
      : BasicLaurentPoly(C(constant), std::move(vars)) {}

  static BasicLaurentPoly variable(std::string_view name, VarTable vars = {});
  static BasicLaurentPoly monomial(const Monomial& m, const C& coeff, VarTable vars = {});
  /// Sorts, merges equal monomials and drops zero coefficients.
  static BasicLaurentPoly from_terms(std::vector<Term> terms, VarTable vars = {});
  /// Terms must already be strictly descending with nonzero coefficients.
  static BasicLaurentPoly from_canonical_terms(std::vector<Term> terms, VarTable vars) {
    BasicLaurentPoly p(std::move(vars));
    p.terms_ = std::move(terms);
    return p;
  }

  const VarTable& vars() const noexcept { return vars_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
  }
  bool is_one() const noexcept {
    return terms_.size() == 1 && terms_.front().mono.is_one() && somos::is_one(terms_.front().coeff);
  }
  /// Constant coefficient if the polynomial is constant.
  std::optional<C> constant_value() const;
  /// Coefficient of the monomial 1 (zero if absent).
  C constant_term() const;

  const Term& leading() const { return terms_.front(); }
  const Term& trailing() const { return terms_.back(); }

  /// Componentwise minimum exponent over all terms (monomial content).
  Monomial min_exponents() const;
  Monomial max_exponents() const;

  BasicLaurentPoly operator-() const;
  BasicLaurentPoly& operator+=(const BasicLaurentPoly& o) { return *this = *this + o; }
  BasicLaurentPoly& operator-=(const BasicLaurentPoly& o) { return *this = *this - o; }
  BasicLaurentPoly& operator*=(const BasicLaurentPoly& o) { return *this = *this * o; }

  friend bool operator==(const BasicLaurentPoly& a, const BasicLaurentPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  BasicLaurentPoly scaled(const C& c) const;
  /// Multiply by a Laurent monomial (exact in the Laurent ring).
  BasicLaurentPoly shifted(const Monomial& m) const;
  BasicLaurentPoly pow(unsigned k) const;
  /// Same polynomial over a table containing every symbol of this one.
  BasicLaurentPoly rebased(const VarTable& target) const;

  /// Canonical text form, e.g. `1*x^2 + -1*r^2*y^-1 + 3`.
  std::string to_string() const;
  /// Hash of the canonical serialization.
  std::size_t hash() const;

 private:
  VarTable vars_;
  std::vector<Term> terms_;
};

template <class C>
BasicLaurentPoly<C> operator+(const BasicLaurentPoly<C>& a, const BasicLaurentPoly<C>& b);
template <class C>
BasicLaurentPoly<C> operator-(const BasicLaurentPoly<C>& a, const BasicLaurentPoly<C>& b);
template <class C>
BasicLaurentPoly<C> operator*(const BasicLaurentPoly<C>& a, const BasicLaurentPoly<C>& b);

using LaurentPoly = BasicLaurentPoly<Rational>;
using GaussianPoly = BasicLaurentPoly<GaussianRational>;

template <class T>
using Assignment = std::map<std::string, T, std::less<>>;

/// q with q*b == a; throws NotDivisible when the remainder is nonzero.
///
/// Monomial content is factored out of both operands first (monomials are
/// units), then graded-lex leading-term division runs in the polynomial ring.
template <class C>
BasicLaurentPoly<C> exact_div(const BasicLaurentPoly<C>& a, const BasicLaurentPoly<C>& b);

/// As exact_div, but reports non-divisibility as nullopt.
template <class C>
std::optional<BasicLaurentPoly<C>> try_exact_div(const BasicLaurentPoly<C>& a,
                                                 const BasicLaurentPoly<C>& b);

Rational evaluate(const LaurentPoly& p, const Assignment<Rational>& values);
GaussianRational evaluate(const LaurentPoly& p, const Assignment<GaussianRational>& values);
GaussianRational evaluate(const GaussianPoly& p, const Assignment<GaussianRational>& values);

/// Substitute values for a subset of variables; the rest stay symbolic.
LaurentPoly specialize(const LaurentPoly& p, const Assignment<Rational>& values);
GaussianPoly specialize(const LaurentPoly& p, const Assignment<GaussianRational>& values);
GaussianPoly specialize(const GaussianPoly& p, const Assignment<GaussianRational>& values);

GaussianPoly to_gaussian(const LaurentPoly& p);

struct VarClass {
  std::string name;
  int min_exponent = 0;
  int max_exponent = 0;
  bool all_even = true;
  bool polynomial() const noexcept { return min_exponent >= 0; }
};

struct ClassReport {
  std::vector<VarClass> vars;

  bool polynomial() const noexcept;
  const VarClass& at(std::string_view name) const;
};

/// Per-variable exponent bounds and parity over `vars`.
template <class C>
ClassReport classify(const BasicLaurentPoly<C>& p, const std::vector<std::string>& vars);

/// Rewrite root^(2k+e) as square^k * root^e with e in {0, 1}; `square` must be a monomial.
template <class C>
BasicLaurentPoly<C> reduce_root(const BasicLaurentPoly<C>& p, std::string_view root,
                                const BasicLaurentPoly<C>& square);

/// Sum of many polynomials in one accumulation pass.
template <class C>
BasicLaurentPoly<C> sum(const std::vector<BasicLaurentPoly<C>>& parts, const VarTable& vars);

}  // namespace somos
