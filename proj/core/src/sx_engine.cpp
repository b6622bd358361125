#include "somos/sx_engine.hpp"

#include "somos/coeff_seq.hpp"
#include "somos/errors.hpp"
#include "somos/hankel.hpp"

#include <string>

namespace somos {

SXState SXState::from(const FunctionalEquationData& fe) {
  return {RatFunc(fe.a), RatFunc(fe.b), RatFunc(fe.c), RatFunc(fe.d), RatFunc(fe.e), RatFunc(fe.f)};
}

SXState sx_step(const SXState& s) {
  if (s.a.is_zero()) throw ZeroPivot("sx_step: pivot a is zero");
  const RatFunc& a = s.a;
  const RatFunc& b = s.b;
  const RatFunc& c = s.c;
  const RatFunc& d = s.d;
  // factors already known to the state split the composite numerator of a
  std::vector<LaurentPoly> base;
  for (const RatFunc* comp : {&s.a, &s.b, &s.c, &s.d, &s.e, &s.f})
    for (const auto& fac : comp->denominator_factors()) base.push_back(fac.poly);
  const RatFunc ia = a.inverse().refined(base);
  const RatFunc ia2 = ia * ia;
  const RatFunc a2 = a * a;
  const RatFunc b2 = b * b;
  const RatFunc ab = a * b;
  const RatFunc two(LaurentPoly(Rational(2), a.vars()));

  SXState n;
  n.a = -((a2 * a * s.e + a2 * d - ab * c + b2) * ia2);
  n.b = -((a2 * a2 * s.f + c * a2 * a * d - a2 * c * c * b + two * a * c * b2 - a2 * b * d - b2 * b) * ia2 * ia);
  n.c = c;
  n.d = -((a2 * d - two * ab * c + two * b2) * ia2);
  n.e = RatFunc(LaurentPoly(Rational(-1), a.vars()));
  n.f = -(b * ia);
  return n;
}

SXTrajectory SXTrajectory::run(SXState s0, std::size_t steps) {
  SXTrajectory t;
  t.states_.reserve(steps + 1);
  t.states_.push_back(std::move(s0));
  for (std::size_t i = 0; i < steps; ++i) t.states_.push_back(sx_step(t.states_.back()));
  return t;
}

RatFunc sx_hankel_product(const SXTrajectory& t, std::size_t n) {
  const VarTable& vars = t[0].a.vars();
  RatFunc p(LaurentPoly(Rational(1), vars));
  for (std::size_t i = 0; i < n; ++i) p *= t[i].a.pow(static_cast<unsigned>(n - i));
  return p;
}

namespace {

void record(VerdictReport& r, const char* label, std::size_t n, const RatFunc& residual) {
  std::string key = index_key(label, static_cast<long>(n));
  if (residual.is_zero()) {
    r.pass(std::move(key));
  } else {
    r.fail(std::move(key), "residual " + residual.to_string());
  }
}

}  // namespace

VerdictReport sx_structure_check(const SXTrajectory& t) {
  VerdictReport r;
  const RatFunc minus_one(LaurentPoly(Rational(-1), t[0].a.vars()));
  for (std::size_t i = 1; i < t.size(); ++i) {
    std::string key = index_key("n", static_cast<long>(i));
    if (!(t[i].c == t[0].c)) {
      r.fail(key, "c changed: " + t[i].c.to_string());
    } else if (!(t[i].e == minus_one)) {
      r.fail(key, "e is " + t[i].e.to_string());
    } else if (t[i].a.is_zero()) {
      r.fail(key, "zero pivot");
    } else {
      r.pass(key);
    }
  }
  return r;
}

VerdictReport sx_closed_identity_check(const SXTrajectory& t, std::size_t up_to) {
  VerdictReport r;
  const RatFunc& c = t[0].c;
  const RatFunc& a0 = t[0].a;
  const RatFunc& a1 = t[1].a;
  const RatFunc two(LaurentPoly(Rational(2), a0.vars()));
  const RatFunc s = t[0].f + c + t[1].f;
  const RatFunc k1 = two * a0 * a1 + a0 * (two * t[1].f + c) * s;
  const RatFunc k2 = a0 * a0 * s * s;
  for (std::size_t n = 0; n <= up_to && n + 2 < t.size(); ++n) {
    const RatFunc& an = t[n].a;
    const RatFunc& an1 = t[n + 1].a;
    const RatFunc& an2 = t[n + 2].a;
    // multiplied through by a_{n+1}
    record(r, "n", n, (an2 * an1 + an1 * an) * an1 - k1 * an1 + k2);
  }
  if (up_to + 2 >= t.size()) r.skip("range", "trajectory ends before n = " + std::to_string(up_to));
  return r;
}

VerdictReport sx_a_recursion_check(const SXTrajectory& t, const SomosParams& p) {
  VerdictReport r;
  const LaurentPoly& x = p.init[2];
  const LaurentPoly& y = p.init[3];
  const RatFunc alpha(p.alpha);
  const RatFunc beta(p.beta);
  const RatFunc K = RatFunc::fraction(p.beta * x * x + y * y + p.alpha * x * x * x + p.alpha * y, x * y);
  auto a = [&](std::size_t i) -> const RatFunc& { return t[i].a; };
  for (std::size_t n = 2; n < t.size(); ++n)
    record(r, "product n", n, a(n) * a(n - 1) * a(n - 1) * a(n - 2) - alpha * a(n - 1) - beta);
  for (std::size_t n = 0; n + 2 < t.size(); ++n)
    record(r, "derived n", n, a(n + 2) * a(n + 1) * a(n + 1) - K * a(n + 1) + alpha + a(n) * a(n + 1) * a(n + 1));
  for (std::size_t n = 2; n < t.size(); ++n) {
    const RatFunc u = a(n - 1) * a(n - 2);
    record(r, "T n", n, K * u - alpha * a(n - 2) - u * u - alpha * a(n - 1) - beta);
  }
  return r;
}

VerdictReport sx_shift_transform_check(const LaurentPoly& x, const LaurentPoly& beta, std::size_t n_max) {
  VerdictReport r;
  CoeffSeq f = a1q_entries(x, beta);
  CoeffSeq g = CoeffSeq::from_series(a1q_shift_initials(x, beta));
  std::vector<LaurentPoly> hf = shifted_hankel_run(f, n_max, 0);
  std::vector<LaurentPoly> hg = shifted_hankel_run(g, n_max, 0);
  for (std::size_t n = 1; n <= n_max; ++n) {
    LaurentPoly res = hf[n] - x.pow(static_cast<unsigned>(n)) * hg[n - 1];
    std::string key = index_key("shift n", static_cast<long>(n));
    if (res.is_zero()) {
      r.pass(key);
    } else {
      r.fail(key, "residual " + res.to_string());
    }
  }
  const LaurentPoly inv_x2 = exact_div(LaurentPoly(Rational(1), x.vars()), x * x);
  for (std::size_t n = 2; n <= n_max; ++n) {
    LaurentPoly res = hg[n] * hg[n - 2] - hg[n - 1] * hg[n - 1] - beta * inv_x2.pow(static_cast<unsigned>(n));
    std::string key = index_key("T n", static_cast<long>(n));
    if (res.is_zero()) {
      r.pass(key);
    } else {
      r.fail(key, "residual " + res.to_string());
    }
  }
  return r;
}

}  // namespace somos
