#include "somos/recurrences.hpp"

#include "somos/errors.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace somos {

namespace {

LaurentPoly checked_quotient(const LaurentPoly& num, const LaurentPoly& den, std::size_t index, bool backward) {
  const char* dir = backward ? "S_-" : "S_";
  if (den.is_zero()) {
    throw SequenceError(SequenceError::Kind::ZeroTerm, index,
                        std::string("zero divisor while computing ") + dir + std::to_string(index));
  }
  auto q = try_exact_div(num, den);
  if (!q) {
    throw SequenceError(SequenceError::Kind::NotDivisible, index,
                        std::string(dir) + std::to_string(index) + " is not a Laurent polynomial");
  }
  if (q->is_zero()) {
    throw SequenceError(SequenceError::Kind::ZeroTerm, index, std::string(dir) + std::to_string(index) + " is zero");
  }
  return std::move(*q);
}

template <std::size_t K>
void require_nonzero(const std::array<LaurentPoly, K>& init) {
  for (std::size_t i = 0; i < K; ++i)
    if (init[i].is_zero())
      throw SequenceError(SequenceError::Kind::ZeroTerm, i, "initial value S_" + std::to_string(i) + " is zero");
}

}  // namespace

std::vector<LaurentPoly> somos4_seq(const SomosParams& p, std::size_t n) {
  require_nonzero(p.init);
  std::vector<LaurentPoly> s(p.init.begin(), p.init.begin() + static_cast<long>(std::min<std::size_t>(4, n + 1)));
  for (std::size_t k = 4; k <= n; ++k) {
    LaurentPoly num = p.alpha * s[k - 1] * s[k - 3] + p.beta * s[k - 2] * s[k - 2];
    s.push_back(checked_quotient(num, s[k - 4], k, false));
  }
  return s;
}

std::vector<LaurentPoly> somos5_seq(const Somos5Params& p, std::size_t n) {
  require_nonzero(p.init);
  std::vector<LaurentPoly> s(p.init.begin(), p.init.begin() + static_cast<long>(std::min<std::size_t>(5, n + 1)));
  for (std::size_t k = 5; k <= n; ++k) {
    LaurentPoly num = p.alpha_t * s[k - 1] * s[k - 4] + p.beta_t * s[k - 2] * s[k - 3];
    s.push_back(checked_quotient(num, s[k - 5], k, false));
  }
  return s;
}

std::vector<LaurentPoly> a1q_seq(const A1QParams& p, std::size_t n) {
  require_nonzero(p.init);
  std::vector<LaurentPoly> s(p.init.begin(), p.init.begin() + static_cast<long>(std::min<std::size_t>(2, n + 1)));
  for (std::size_t k = 2; k <= n; ++k) {
    LaurentPoly num = s[k - 1] * s[k - 1] + p.beta;
    s.push_back(checked_quotient(num, s[k - 2], k, false));
  }
  return s;
}

std::vector<LaurentPoly> somos4_backward(const SomosParams& p, std::size_t count) {
  require_nonzero(p.init);
  // window[j] = S_{j - back}; grows at the front
  std::vector<LaurentPoly> w(p.init.begin(), p.init.end());
  for (std::size_t k = 1; k <= count; ++k) {
    LaurentPoly num = p.alpha * w[2] * w[0] + p.beta * w[1] * w[1];
    w.insert(w.begin(), checked_quotient(num, w[3], k, true));
  }
  w.resize(count);
  return w;
}

std::vector<LaurentPoly> somos5_backward(const Somos5Params& p, std::size_t count) {
  require_nonzero(p.init);
  std::vector<LaurentPoly> w(p.init.begin(), p.init.end());
  for (std::size_t k = 1; k <= count; ++k) {
    LaurentPoly num = p.alpha_t * w[3] * w[0] + p.beta_t * w[2] * w[1];
    w.insert(w.begin(), checked_quotient(num, w[4], k, true));
  }
  w.resize(count);
  return w;
}

VerdictReport somos4_residual_check(const std::vector<LaurentPoly>& s, const LaurentPoly& alpha,
                                    const LaurentPoly& beta) {
  VerdictReport r;
  for (std::size_t n = 4; n < s.size(); ++n) {
    LaurentPoly res = s[n] * s[n - 4] - alpha * s[n - 1] * s[n - 3] - beta * s[n - 2] * s[n - 2];
    if (res.is_zero()) {
      r.pass(index_key("n", static_cast<long>(n)));
    } else {
      r.fail(index_key("n", static_cast<long>(n)), "residual " + res.to_string());
    }
  }
  return r;
}

VerdictReport somos5_residual_check(const std::vector<LaurentPoly>& s, const LaurentPoly& alpha_t,
                                    const LaurentPoly& beta_t) {
  VerdictReport r;
  for (std::size_t n = 5; n < s.size(); ++n) {
    LaurentPoly res = s[n] * s[n - 5] - alpha_t * s[n - 1] * s[n - 4] - beta_t * s[n - 2] * s[n - 3];
    if (res.is_zero()) {
      r.pass(index_key("n", static_cast<long>(n)));
    } else {
      r.fail(index_key("n", static_cast<long>(n)), "residual " + res.to_string());
    }
  }
  return r;
}

std::pair<std::vector<LaurentPoly>, std::vector<LaurentPoly>> split_even_odd(const std::vector<LaurentPoly>& s) {
  std::pair<std::vector<LaurentPoly>, std::vector<LaurentPoly>> out;
  for (std::size_t i = 0; i < s.size(); ++i) (i % 2 ? out.second : out.first).push_back(s[i]);
  return out;
}

std::vector<LaurentPoly> merge_even_odd(const std::vector<LaurentPoly>& even, const std::vector<LaurentPoly>& odd) {
  if (odd.size() > even.size() || even.size() > odd.size() + 1)
    throw std::invalid_argument("merge_even_odd: halves have incompatible lengths");
  std::vector<LaurentPoly> s;
  for (std::size_t i = 0; i < even.size(); ++i) {
    s.push_back(even[i]);
    if (i < odd.size()) s.push_back(odd[i]);
  }
  return s;
}

SomosParams induced_somos4_params(const LaurentPoly& x, const LaurentPoly& y, const LaurentPoly& z,
                                  const LaurentPoly& A, const LaurentPoly& B) {
  LaurentPoly xyz = x * y * z;
  LaurentPoly two(Rational(2), x.vars());
  LaurentPoly inner = A.pow(3) * xyz + A * A * B * x * x * y * y + A * A * B * x * x * z + A * B * B * x.pow(3) * y +
                      A * B * y * y * z + A * B * z * z + two * B * B * xyz;
  SomosParams p;
  p.alpha = B * B;
  p.beta = exact_div(A * inner, xyz);
  Somos5Params s5{A, B, {LaurentPoly(Rational(1), x.vars()), LaurentPoly(Rational(1), x.vars()), x, y, z}};
  auto s = somos5_seq(s5, 6);
  p.init = {s[0], s[2], s[4], s[6]};
  return p;
}

}  // namespace somos
