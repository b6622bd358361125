#include "somos/rat_func.hpp"

#include "somos/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace somos {

namespace {

struct Normalized {
  LaurentPoly unit;    // monomial times constant
  LaurentPoly factor;  // content-free, leading coefficient 1
};

Normalized normalize(const LaurentPoly& g) {
  Monomial content = g.min_exponents();
  Rational lc = g.leading().coeff;
  LaurentPoly unit = LaurentPoly::monomial(content, lc, g.vars());
  LaurentPoly rest = g.shifted(Monomial{} / content).scaled(Rational(1) / lc);
  return {std::move(unit), std::move(rest)};
}

LaurentPoly unit_inverse(const LaurentPoly& unit) {
  const auto& t = unit.leading();
  return LaurentPoly::monomial(Monomial{} / t.mono, Rational(1) / t.coeff, unit.vars());
}

}  // namespace

RatFunc::RatFunc(LaurentPoly p) : num_(std::move(p)) {}

RatFunc RatFunc::fraction(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  RatFunc r(num.vars());
  if (num.is_zero()) return r;
  Normalized n = normalize(den);
  r.num_ = num * unit_inverse(n.unit);
  r.add_factor(std::move(n.factor), 1);
  r.reduce();
  return r;
}

LaurentPoly RatFunc::denominator() const {
  LaurentPoly d(Rational(1), vars());
  for (const auto& f : den_) d = d * f.poly.pow(static_cast<unsigned>(f.multiplicity));
  return d;
}

std::optional<LaurentPoly> RatFunc::as_laurent() const {
  if (den_.empty()) return num_;
  return std::nullopt;
}

void RatFunc::add_factor(LaurentPoly g, int multiplicity) {
  if (g.is_one()) return;
  // strip factors already on record
  bool progress = true;
  while (progress && !g.is_one()) {
    progress = false;
    for (auto& f : den_) {
      if (auto q = try_exact_div(g, f.poly)) {
        f.multiplicity += multiplicity;
        g = std::move(*q);
        progress = true;
        break;
      }
    }
  }
  if (g.is_one()) return;
  // split recorded factors that g divides
  int extra = 0;
  std::vector<Factor> refined;
  for (auto& f : den_) {
    if (auto q = try_exact_div(f.poly, g)) {
      extra += f.multiplicity;
      if (!q->is_one()) refined.push_back({std::move(*q), f.multiplicity});
    } else {
      refined.push_back(std::move(f));
    }
  }
  refined.push_back({std::move(g), multiplicity + extra});
  den_ = std::move(refined);
}

void RatFunc::reduce() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  for (auto& f : den_) {
    while (f.multiplicity > 0) {
      auto q = try_exact_div(num_, f.poly);
      if (!q) break;
      num_ = std::move(*q);
      --f.multiplicity;
    }
  }
  den_.erase(std::remove_if(den_.begin(), den_.end(), [](const Factor& f) { return f.multiplicity == 0; }),
             den_.end());
}

RatFunc RatFunc::inverse() const {
  if (num_.is_zero()) throw std::domain_error("inverse of the zero rational function");
  Normalized n = normalize(num_);
  RatFunc r(vars());
  r.num_ = denominator() * unit_inverse(n.unit);
  r.add_factor(std::move(n.factor), 1);
  r.reduce();
  return r;
}

RatFunc RatFunc::refined(const std::vector<LaurentPoly>& base) const {
  RatFunc r = *this;
  for (const auto& h : base) {
    if (h.is_one()) continue;
    for (std::size_t i = 0; i < r.den_.size(); ++i) {
      if (r.den_[i].poly == h) continue;
      if (auto q = try_exact_div(r.den_[i].poly, h)) {
        Factor f = r.den_[i];
        r.den_.erase(r.den_.begin() + static_cast<std::ptrdiff_t>(i));
        r.add_factor(std::move(*q), f.multiplicity);
        r.add_factor(h, f.multiplicity);
        i = static_cast<std::size_t>(-1);  // rescan, the list changed
      }
    }
  }
  r.reduce();
  return r;
}

RatFunc RatFunc::pow(unsigned k) const {
  RatFunc r(LaurentPoly(Rational(1), vars()));
  RatFunc base = *this;
  while (k > 0) {
    if (k & 1U) r = r * base;
    k >>= 1U;
    if (k) base = base * base;
  }
  return r;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  RatFunc r(a.vars());
  if (a.is_zero() || b.is_zero()) return r;
  r.num_ = a.num_ * b.num_;
  r.den_ = a.den_;
  for (const auto& f : b.den_) r.add_factor(f.poly, f.multiplicity);
  r.reduce();
  return r;
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_.empty() && b.den_.empty()) return RatFunc(a.num_ + b.num_);
  // common denominator: union of factor lists with maximal multiplicities
  std::vector<RatFunc::Factor> common = a.den_;
  for (const auto& f : b.den_) {
    auto it = std::find_if(common.begin(), common.end(),
                           [&](const RatFunc::Factor& g) { return g.poly == f.poly; });
    if (it == common.end()) {
      common.push_back(f);
    } else {
      it->multiplicity = std::max(it->multiplicity, f.multiplicity);
    }
  }
  auto cofactor = [&](const std::vector<RatFunc::Factor>& own) {
    LaurentPoly c(Rational(1), a.vars());
    for (const auto& g : common) {
      int have = 0;
      for (const auto& f : own)
        if (f.poly == g.poly) have = f.multiplicity;
      if (g.multiplicity > have) c = c * g.poly.pow(static_cast<unsigned>(g.multiplicity - have));
    }
    return c;
  };
  RatFunc r(a.vars());
  r.num_ = a.num_ * cofactor(a.den_) + b.num_ * cofactor(b.den_);
  r.den_ = std::move(common);
  r.reduce();
  return r;
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

bool operator==(const RatFunc& a, const RatFunc& b) {
  if (a.den_.empty() && b.den_.empty()) return a.num_ == b.num_;
  return a.num_ * b.denominator() == b.num_ * a.denominator();
}

std::string RatFunc::to_string() const {
  if (den_.empty()) return num_.to_string();
  return "(" + num_.to_string() + ") / (" + denominator().to_string() + ")";
}

}  // namespace somos
