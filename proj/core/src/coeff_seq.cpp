#include "somos/coeff_seq.hpp"

#include "somos/errors.hpp"

#include <deque>
#include <mutex>
#include <optional>
#include <stdexcept>

namespace somos {

std::string_view to_string(SeqKind k) noexcept {
  switch (k) {
    case SeqKind::Somos4P: return "somos4-p";
    case SeqKind::Somos5P: return "somos5-p";
    case SeqKind::Somos5Q: return "somos5-q";
    case SeqKind::A1QP: return "a1q-p";
    case SeqKind::SeriesDerived: return "series-derived";
  }
  return "?";
}

struct CoeffSeq::State {
  SeqKind kind;
  VarTable vars;
  std::optional<ConvolutionRule> rule;
  std::optional<FunctionalEquationData> fe;
  mutable std::mutex mu;
  std::vector<LaurentPoly> terms;

  LaurentPoly next_convolution() const {
    const auto& r = *rule;
    const std::size_t m = terms.size();
    std::vector<LaurentPoly> parts;
    if (!r.c1.is_zero()) parts.push_back(r.c1 * terms[m - 1]);
    if (!r.c2.is_zero()) parts.push_back(r.c2 * terms[m - 2]);
    const std::size_t top = m - static_cast<std::size_t>(r.lag);
    for (std::size_t k = static_cast<std::size_t>(r.sum_from); k <= top; ++k)
      parts.push_back(terms[k] * terms[top - k]);
    return sum(parts, vars);
  }

  void extend_to(std::size_t n) {
    while (terms.size() < n) {
      if (fe) {
        terms.push_back(fe_next_coefficient(*fe, terms));
      } else {
        terms.push_back(next_convolution());
      }
    }
  }
};

CoeffSeq CoeffSeq::convolution(SeqKind kind, LaurentPoly p0, LaurentPoly p1, ConvolutionRule rule) {
  if (rule.lag < 1 || rule.lag > 2) throw std::invalid_argument("convolution lag must be 1 or 2");
  CoeffSeq s;
  s.state_ = std::make_shared<State>();
  s.state_->kind = kind;
  s.state_->vars = p0.vars();
  s.state_->terms = {std::move(p0), std::move(p1)};
  s.state_->rule = std::move(rule);
  return s;
}

CoeffSeq CoeffSeq::from_series(FunctionalEquationData fe) {
  CoeffSeq s;
  s.state_ = std::make_shared<State>();
  s.state_->kind = SeqKind::SeriesDerived;
  s.state_->vars = fe.a.vars();
  s.state_->fe = std::move(fe);
  return s;
}

SeqKind CoeffSeq::kind() const noexcept { return state_->kind; }
const VarTable& CoeffSeq::vars() const noexcept { return state_->vars; }

LaurentPoly CoeffSeq::term(std::size_t m) const {
  std::lock_guard lock(state_->mu);
  state_->extend_to(m + 1);
  return state_->terms[m];
}

std::vector<LaurentPoly> CoeffSeq::prefix(std::size_t n) const {
  std::lock_guard lock(state_->mu);
  state_->extend_to(n);
  return {state_->terms.begin(), state_->terms.begin() + static_cast<std::ptrdiff_t>(n)};
}

std::size_t CoeffSeq::computed() const {
  std::lock_guard lock(state_->mu);
  return state_->terms.size();
}

namespace {

LaurentPoly constant(long c, const VarTable& vars) { return LaurentPoly(Rational(c), vars); }

}  // namespace

CoeffSeq somos4_entries(const LaurentPoly& x, const LaurentPoly& y, const LaurentPoly& beta,
                        const LaurentPoly& r) {
  LaurentPoly alpha = r * r;
  LaurentPoly c1 = exact_div(beta * x * x - y * y + alpha * x * x * x - alpha * y, r * x * y);
  LaurentPoly c2 = exact_div(beta + alpha * x - x * y, y);
  return CoeffSeq::convolution(SeqKind::Somos4P, x, -r, {std::move(c1), std::move(c2), 2, 0});
}

std::pair<CoeffSeq, CoeffSeq> somos5_entries(const LaurentPoly& x, const LaurentPoly& y, const LaurentPoly& z,
                                             const LaurentPoly& A, const LaurentPoly& B) {
  LaurentPoly xyz = x * y * z;
  LaurentPoly c1p = exact_div(A * x * x * z - A * x * x * y * y - B * x * x * x * y - z * y * y + z * z, xyz);
  LaurentPoly c2p = exact_div(A * A * x.pow(4) * y + A * B * x.pow(5) + B * x.pow(3) * z - y * z * z, x * x * y * z);
  LaurentPoly c1q = exact_div(A * x * x * z + A * x * x * y * y - z * z - z * y * y + B * x.pow(3) * y, xyz);
  LaurentPoly c2q = exact_div(A * y.pow(4) - A * z * z + B * x * y.pow(3) - B * x * y * z, y * y * z);
  LaurentPoly p0 = exact_div(z, x * x);
  LaurentPoly q0 = exact_div(A * z + B * x * y, y * y);
  return {CoeffSeq::convolution(SeqKind::Somos5P, std::move(p0), -B, {std::move(c1p), std::move(c2p), 2, 0}),
          CoeffSeq::convolution(SeqKind::Somos5Q, std::move(q0), -B, {std::move(c1q), std::move(c2q), 2, 0})};
}

CoeffSeq a1q_entries(const LaurentPoly& x, const LaurentPoly& beta) {
  const VarTable& v = x.vars();
  LaurentPoly c1 = exact_div(beta + constant(1, v) - x * x, x);
  return CoeffSeq::convolution(SeqKind::A1QP, x, constant(1, v), {std::move(c1), LaurentPoly(v), 1, 0});
}

CoeffSeq a1q_entries_alt(const LaurentPoly& x, const LaurentPoly& beta) {
  const VarTable& v = x.vars();
  LaurentPoly c1 = exact_div(beta + constant(1, v), x);
  return CoeffSeq::convolution(SeqKind::A1QP, x, constant(1, v), {std::move(c1), LaurentPoly(v), 1, 1});
}

CoeffSeq corollary_entries() {
  const VarTable v = VarTable::with_root();
  auto var = [&](const char* n) { return LaurentPoly::variable(n, v); };
  LaurentPoly x = var("x"), y = var("y"), z = var("z"), s = var("s");
  LaurentPoly c1 = exact_div(-(y * z) + x * y - z - x * z, s);
  return CoeffSeq::convolution(SeqKind::Somos4P, y, -s, {std::move(c1), x - y, 2, 0});
}

FunctionalEquationData somos4_family_initials(const LaurentPoly& x, const LaurentPoly& y, const LaurentPoly& b,
                                              const LaurentPoly& r, const FamilyParams& fam) {
  if (fam.k != 1 && fam.k != -1) throw std::invalid_argument("family sign k must be +1 or -1");
  const VarTable& v = x.vars();
  const LaurentPoly& f = fam.f0.is_zero() ? LaurentPoly(v) : fam.f0;
  LaurentPoly k = constant(fam.k, v);
  LaurentPoly kr = k * r;
  LaurentPoly r2 = r * r;
  LaurentPoly x2 = x * x, x3 = x2 * x, y2 = y * y;
  FunctionalEquationData fe;
  fe.a = x;
  fe.b = -exact_div(b * x2 + kr * f * x * y + r2 * x3 - y2, kr * y);
  fe.c = -exact_div(b * x2 + constant(2, v) * kr * f * x * y + r2 * x3 - r2 * y - y2, kr * x * y);
  fe.d = exact_div(b * f * x2 - b * kr * x + kr * f * f * x * y + f * r2 * x3 - f * r2 * y - f * y2 -
                       kr * r2 * x2 + kr * x2 * y,
                   kr * x * y);
  fe.e = constant(-1, v);
  fe.f = f;
  return fe;
}

FunctionalEquationData somos4_initials(const LaurentPoly& x, const LaurentPoly& y, const LaurentPoly& b,
                                       const LaurentPoly& r) {
  const VarTable& v = x.vars();
  LaurentPoly alpha = r * r;
  LaurentPoly x2 = x * x;
  FunctionalEquationData fe;
  fe.a = x;
  fe.b = -exact_div(b * x2 - y * y + alpha * x2 * x, r * y);
  fe.c = -exact_div(b * x2 - y * y + alpha * x2 * x - alpha * y, r * x * y);
  fe.d = -exact_div(b + alpha * x - x * y, y);
  fe.e = constant(-1, v);
  fe.f = LaurentPoly(v);
  return fe;
}

FunctionalEquationData a1q_shift_initials(const LaurentPoly& x, const LaurentPoly& b) {
  const VarTable& v = x.vars();
  LaurentPoly x2 = x * x;
  FunctionalEquationData fe;
  fe.a = exact_div(b + x2, x2);
  fe.b = -exact_div(b, x2 * x);
  fe.c = -exact_div(b + constant(1, v) + x2, x);
  fe.d = exact_div(constant(2, v) * b, x2);
  fe.e = constant(-1, v);
  fe.f = exact_div(b, x);
  return fe;
}

}  // namespace somos
