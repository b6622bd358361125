#include "somos/a1q_identities.hpp"

namespace somos {

namespace {

template <class P>
void record(VerdictReport& r, std::size_t n, const P& residual) {
  std::string key = index_key("n", static_cast<long>(n));
  if (residual.is_zero()) {
    r.pass(std::move(key));
  } else {
    r.fail(std::move(key), "residual " + residual.to_string());
  }
}

}  // namespace

LaurentPoly a1q_three_term_coefficient(const LaurentPoly& x, const LaurentPoly& beta) {
  return exact_div(x * x + LaurentPoly(Rational(1), x.vars()) + beta, x);
}

VerdictReport a1q_three_term_check(const std::vector<LaurentPoly>& s, const LaurentPoly& x, const LaurentPoly& beta) {
  VerdictReport r;
  LaurentPoly c = x * x + LaurentPoly(Rational(1), x.vars()) + beta;
  for (std::size_t n = 2; n < s.size(); ++n) record(r, n, x * s[n] - c * s[n - 1] + x * s[n - 2]);
  return r;
}

VerdictReport a1q_somos4_embedding_check(const std::vector<LaurentPoly>& s, const LaurentPoly& x,
                                         const LaurentPoly& beta) {
  VerdictReport r;
  LaurentPoly x2 = x * x;
  LaurentPoly c = x2 + LaurentPoly(Rational(1), x.vars()) + beta;
  LaurentPoly c2 = c * c;
  for (std::size_t n = 2; n + 2 < s.size(); ++n)
    record(r, n, x2 * s[n + 2] * s[n - 2] - c2 * s[n + 1] * s[n - 1] - (x2 - c2) * s[n] * s[n]);
  return r;
}

std::vector<GaussianPoly> scaled_a1q(const std::vector<GaussianPoly>& s, const GaussianPoly& g) {
  std::vector<GaussianPoly> f;
  f.reserve(s.size());
  GaussianPoly scale(GaussianRational(1), g.vars());
  for (const auto& term : s) {
    f.push_back(scale * term);
    scale = scale * g;
  }
  return f;
}

VerdictReport scaled_a1q_check(const std::vector<GaussianPoly>& f, const GaussianPoly& beta, const GaussianPoly& g) {
  VerdictReport r;
  GaussianPoly gamma = g * g;
  for (std::size_t n = 2; n < f.size(); ++n)
    record(r, n, f[n] * f[n - 2] - f[n - 1] * f[n - 1] - beta * gamma.pow(static_cast<unsigned>(n - 1)));
  return r;
}

}  // namespace somos
