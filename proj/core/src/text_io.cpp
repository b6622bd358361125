#include "somos/text_io.hpp"

#include "somos/errors.hpp"

#include <cctype>
#include <limits>

namespace somos {

namespace {

std::string coeff_text(const Rational& c) { return to_string(c); }

std::string coeff_text(const GaussianRational& c) {
  if (sgn(c.im) == 0) return to_string(c.re);
  return "(" + to_string(c) + ")";
}

template <class C>
class Parser {
 public:
  using Poly = BasicLaurentPoly<C>;

  Parser(std::string_view text, const VarTable& vars, bool allow_imaginary)
      : text_(text), vars_(vars), allow_imaginary_(allow_imaginary) {}

  Poly parse() {
    Poly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  std::string_view text_;
  const VarTable& vars_;
  bool allow_imaginary_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly acc = term();
    for (;;) {
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        Poly d = unary();
        if (d.is_zero()) fail("division by zero");
        acc = exact_div(acc, d);
      } else {
        return acc;
      }
    }
  }

  Poly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Poly power() {
    Poly base = atom();
    if (!accept('^')) return base;
    skip_ws();
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    long e = integer();
    if (!negative) return base.pow(static_cast<unsigned>(e));
    if (base.is_zero()) fail("zero raised to a negative power");
    if (!base.is_monomial()) fail("negative power of a non-monomial");
    const auto& t = base.leading();
    return Poly::monomial(t.mono.pow(-e), pow(t.coeff, -e), vars_);
  }

  long integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer exponent");
    std::string digits(text_.substr(start, pos_ - start));
    if (digits.size() > 6) fail("exponent too large");
    return std::stol(digits);
  }

  Poly atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      Integer n(std::string(text_.substr(start, pos_ - start)));
      Poly lit(C(Rational(n)), vars_);
      // Gaussian literal such as 3i, as printed in canonical text
      if constexpr (std::is_same_v<C, GaussianRational>) {
        if (allow_imaginary_ && pos_ < text_.size() && text_[pos_] == 'i' &&
            (pos_ + 1 == text_.size() || !std::isalnum(static_cast<unsigned char>(text_[pos_ + 1])))) {
          ++pos_;
          return lit * Poly(GaussianRational::imaginary_unit(), vars_);
        }
      }
      return lit;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (name == "i" && allow_imaginary_ && !vars_.index_of(name)) {
        if constexpr (std::is_same_v<C, GaussianRational>) {
          return Poly(GaussianRational::imaginary_unit(), vars_);
        }
      }
      if (!vars_.index_of(name)) throw UnknownVariable("unknown variable '" + name + "'");
      return Poly::variable(name, vars_);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }
};

}  // namespace

template <class C>
std::string BasicLaurentPoly<C>::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) out += " + ";
    first = false;
    out += coeff_text(t.coeff);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (t.mono.e[i] == 0) continue;
      out += '*';
      out += vars_.name(i);
      out += '^';
      out += std::to_string(t.mono.e[i]);
    }
  }
  return out;
}

template std::string BasicLaurentPoly<Rational>::to_string() const;
template std::string BasicLaurentPoly<GaussianRational>::to_string() const;

LaurentPoly parse_laurent(std::string_view text, const VarTable& vars) {
  return Parser<Rational>(text, vars, false).parse();
}

GaussianPoly parse_gaussian_poly(std::string_view text, const VarTable& vars) {
  return Parser<GaussianRational>(text, vars, true).parse();
}

}  // namespace somos
