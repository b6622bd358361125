#include "somos/rational.hpp"

#include "somos/errors.hpp"

#include <stdexcept>

namespace somos {

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero Gaussian rational");
  Rational n = o.norm();
  *this *= o.conj();
  re /= n;
  im /= n;
  return *this;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const GaussianRational& q) {
  if (sgn(q.im) == 0) return to_string(q.re);
  std::string out = to_string(q.re);
  if (sgn(q.im) > 0) out += '+';
  out += to_string(q.im);
  out += 'i';
  return out;
}

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw ParseError("empty rational literal");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  bool seen_slash = false;
  bool digit_before = false;
  bool digit_after = false;
  for (std::size_t i = start; i < text.size(); ++i) {
    char c = text[i];
    if (c == '/') {
      if (seen_slash) throw ParseError("malformed rational: " + std::string(text));
      seen_slash = true;
    } else if (c >= '0' && c <= '9') {
      (seen_slash ? digit_after : digit_before) = true;
    } else {
      throw ParseError("malformed rational: " + std::string(text));
    }
  }
  if (!digit_before || (seen_slash && !digit_after))
    throw ParseError("malformed rational: " + std::string(text));
  std::string body(text.substr(text[0] == '+' ? 1 : 0));
  Rational q;
  if (q.set_str(body, 10) != 0) throw ParseError("malformed rational: " + std::string(text));
  if (sgn(q.get_den()) == 0) throw ParseError("zero denominator: " + std::string(text));
  q.canonicalize();
  return q;
}

GaussianRational parse_gaussian(std::string_view text) {
  if (text.empty() || text.back() != 'i') return GaussianRational(parse_rational(text));
  // split at the last sign that is not the leading one
  std::size_t split = std::string_view::npos;
  for (std::size_t i = text.size() - 1; i > 0; --i) {
    if (text[i] == '+' || text[i] == '-') {
      split = i;
      break;
    }
  }
  std::string_view im_part = text.substr(split == std::string_view::npos ? 0 : split);
  im_part.remove_suffix(1);
  Rational re(0);
  if (split != std::string_view::npos) re = parse_rational(text.substr(0, split));
  Rational im;
  if (im_part.empty() || im_part == "+") {
    im = 1;
  } else if (im_part == "-") {
    im = -1;
  } else {
    im = parse_rational(im_part);
  }
  return {re, im};
}

namespace {

template <class T>
T pow_impl(const T& base, long exponent) {
  T result(1);
  if (exponent == 0) return result;
  T b = base;
  if (exponent < 0) {
    if (is_zero(base)) throw std::domain_error("zero raised to a negative power");
    b = T(1) / b;
    exponent = -exponent;
  }
  while (exponent > 0) {
    if (exponent & 1) result *= b;
    exponent >>= 1;
    if (exponent) b *= b;
  }
  return result;
}

}  // namespace

Rational pow(const Rational& base, long exponent) { return pow_impl(base, exponent); }
GaussianRational pow(const GaussianRational& base, long exponent) { return pow_impl(base, exponent); }

bool rational_sqrt(const Rational& q, Rational& root) {
  if (sgn(q) < 0) return false;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t()))
    return false;
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  root = Rational(n, d);
  root.canonicalize();
  return true;
}

}  // namespace somos
