#include "somos/poly_verify.hpp"

#include "somos/coeff_seq.hpp"
#include "somos/errors.hpp"
#include "somos/hankel.hpp"
#include "somos/invariants.hpp"
#include "somos/recurrences.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace somos {

namespace {

LaurentPoly var(const char* name) { return LaurentPoly::variable(name); }
LaurentPoly one() { return LaurentPoly(Rational(1)); }

const std::vector<std::string> kXYZW = {"x", "y", "z", "w"};

PolyCase make_case(std::string name, PolySystem sys, std::string_view pattern) {
  LaurentPoly x = var("x"), y = var("y"), z = var("z"), w = var("w");
  LaurentPoly coeff = x * y * z * w;
  PolyCase c{std::move(name), sys, {}, coeff, coeff, kXYZW, 0};
  for (char ch : pattern) c.init.push_back(ch == '1' ? one() : var(std::string(1, ch).c_str()));
  return c;
}

}  // namespace

std::vector<PolyCase> somos4_poly_cases() {
  std::vector<PolyCase> out;
  const char* patterns[] = {"1xwy", "x1wy", "xw1y", "xwy1"};
  int i = 1;
  for (const char* p : patterns) out.push_back(make_case("somos4 case " + std::to_string(i++), PolySystem::Somos4, p));
  return out;
}

std::vector<PolyCase> somos5_poly_cases() {
  std::vector<PolyCase> out;
  const char* patterns[] = {"1xw1y", "x1wy1", "1xwy1", "1x1wy", "xw1y1",
                            "x1w1y", "11xwy", "x11wy", "xw11y", "xwy11"};
  int i = 1;
  for (const char* p : patterns) out.push_back(make_case("somos5 case " + std::to_string(i++), PolySystem::Somos5, p));
  return out;
}

PolyCase somos4_xyz_case() {
  LaurentPoly x = var("x"), y = var("y"), z = var("z");
  LaurentPoly coeff = x * y * z;
  return {"somos4 xyz", PolySystem::Somos4, {x, one(), one(), y}, coeff, coeff, {"x", "y", "z"}, 1};
}

std::vector<LaurentPoly> poly_case_terms(const PolyCase& c, std::size_t n) {
  std::vector<LaurentPoly> back;
  std::vector<LaurentPoly> fwd;
  if (c.system == PolySystem::Somos4) {
    if (c.init.size() != 4) throw std::invalid_argument("somos4 case needs 4 initial values");
    SomosParams p{c.alpha, c.beta, {c.init[0], c.init[1], c.init[2], c.init[3]}};
    fwd = somos4_seq(p, n);
    if (c.backward) back = somos4_backward(p, c.backward);
  } else {
    if (c.init.size() != 5) throw std::invalid_argument("somos5 case needs 5 initial values");
    Somos5Params p{c.alpha, c.beta, {c.init[0], c.init[1], c.init[2], c.init[3], c.init[4]}};
    fwd = somos5_seq(p, n);
    if (c.backward) back = somos5_backward(p, c.backward);
  }
  back.insert(back.end(), fwd.begin(), fwd.end());
  return back;
}

VerdictReport verify_polynomial_case(const PolyCase& c, std::size_t n) {
  VerdictReport r;
  r.suite = c.name;
  std::vector<LaurentPoly> terms;
  try {
    terms = poly_case_terms(c, n);
  } catch (const SequenceError& e) {
    r.fail(index_key("n", static_cast<long>(e.index())), e.what());
    return r;
  }
  const long offset = static_cast<long>(c.backward);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const long idx = static_cast<long>(i) - offset;
    ClassReport cr = classify(terms[i], c.vars);
    std::string key = index_key("n", idx);
    if (cr.polynomial()) {
      r.pass(key);
      continue;
    }
    std::string w = "S_" + std::to_string(idx) + " =" + " " + terms[i].to_string() + "; negative exponent in";
    for (const auto& v : cr.vars)
      if (!v.polynomial()) w += " " + v.name + "^" + std::to_string(v.min_exponent);
    r.fail(key, w);
  }
  return r;
}

VerdictReport corollary_determinant_check(std::size_t n) {
  VerdictReport r;
  r.suite = "corollary-det";
  const VarTable v = VarTable::with_root();
  LaurentPoly x = LaurentPoly::variable("x", v), y = LaurentPoly::variable("y", v), z = LaurentPoly::variable("z", v);
  LaurentPoly xyz = x * y * z;
  LaurentPoly unit(Rational(1), v);
  std::vector<LaurentPoly> s = somos4_seq({xyz, xyz, {x, unit, unit, y}}, n + 2);
  CoeffSeq entries = corollary_entries();
  for (std::size_t k = 1; k <= n; ++k) {
    LaurentPoly det = reduce_root(det_bareiss(hankel_matrix(entries, k)), "s", xyz);
    LaurentPoly res = det - s[k + 2];
    std::string key = index_key("n", static_cast<long>(k));
    if (res.is_zero()) {
      r.pass(key);
    } else {
      r.fail(key, "det " + det.to_string() + " vs S " + s[k + 2].to_string());
    }
  }
  return r;
}

namespace {

void check_polynomial(VerdictReport& r, const std::string& key, const RatFunc& value,
                      const std::vector<std::string>& vars) {
  auto lp = value.as_laurent();
  if (!lp) {
    r.fail(key, "not a Laurent polynomial: " + value.to_string());
  } else if (!classify(*lp, vars).polynomial()) {
    r.fail(key, "not polynomial: " + lp->to_string());
  } else {
    r.pass(key);
  }
}

}  // namespace

VerdictReport strong_laurent_consequence_check(PolySystem system, std::size_t n) {
  VerdictReport r;
  const std::vector<std::string> params = {"r", "z", "w", "b", "a"};
  std::vector<LaurentPoly> s;
  if (system == PolySystem::Somos4) {
    r.suite = "strong-laurent somos4";
    s = somos4_seq({var("r").pow(2), var("b"), {one(), one(), var("x"), var("y")}}, n);
  } else {
    r.suite = "strong-laurent somos5";
    s = somos5_seq({var("a"), var("b"), {one(), one(), var("x"), var("y"), var("z")}}, n);
  }
  std::vector<std::string> fixed = params;
  if (system == PolySystem::Somos5) fixed.erase(std::find(fixed.begin(), fixed.end(), "z"));
  for (std::size_t i = 0; i < s.size(); ++i) {
    ClassReport cr = classify(s[i], fixed);
    std::string key = index_key("denominator n", static_cast<long>(i));
    if (cr.polynomial()) {
      r.pass(key);
    } else {
      r.fail(key, "S_" + std::to_string(i) + " has a denominator outside the initial values: " + s[i].to_string());
    }
  }

  const auto cases = system == PolySystem::Somos4 ? somos4_poly_cases() : somos5_poly_cases();
  for (const auto& c : cases) {
    std::vector<LaurentPoly> t = poly_case_terms(c, system == PolySystem::Somos4 ? 3 : 4);
    RatFunc A(c.alpha), B(c.beta);
    if (system == PolySystem::Somos4) {
      RatFunc T = invariant_T(t, c.alpha, c.beta).value;
      check_polynomial(r, c.name + "/beta*T", B * T, c.vars);
      check_polynomial(r, c.name + "/alpha^2+beta*T", A * A + B * T, c.vars);
    } else {
      RatFunc T = invariant_Ttilde(t, c.alpha, c.beta).value;
      check_polynomial(r, c.name + "/alpha*T", A * T, c.vars);
      check_polynomial(r, c.name + "/beta+alpha*T", B + A * T, c.vars);
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// gcd probe

std::string_view to_string(CoprimalityVerdict::Outcome o) noexcept {
  switch (o) {
    case CoprimalityVerdict::Outcome::ProbablyCoprime: return "probably-coprime";
    case CoprimalityVerdict::Outcome::NotCoprime: return "not-coprime";
    case CoprimalityVerdict::Outcome::Inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

using UPoly = std::vector<Rational>;  // index = degree

void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

UPoly upoly_rem(UPoly a, const UPoly& b) {
  while (a.size() >= b.size()) {
    Rational q = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

std::size_t gcd_degree(std::vector<UPoly> polys) {
  UPoly g;
  for (auto& p : polys) {
    trim(p);
    if (p.empty()) continue;
    if (g.empty()) {
      g = std::move(p);
      continue;
    }
    UPoly a = std::move(g), b = std::move(p);
    while (!b.empty()) {
      UPoly rem = upoly_rem(a, b);
      a = std::move(b);
      b = std::move(rem);
    }
    g = std::move(a);
    if (g.size() == 1) return 0;
  }
  return g.empty() ? 0 : g.size() - 1;
}

// univariate image in variable `idx`; nullopt if a negative exponent remains
std::optional<UPoly> to_upoly(const LaurentPoly& p, std::size_t idx) {
  UPoly out;
  for (const auto& t : p.terms()) {
    int e = t.mono.e[idx];
    if (e < 0) return std::nullopt;
    if (out.size() <= static_cast<std::size_t>(e)) out.resize(static_cast<std::size_t>(e) + 1, Rational(0));
    out[static_cast<std::size_t>(e)] += t.coeff;
  }
  return out;
}

}  // namespace

CoprimalityVerdict gcd_probe(const std::vector<LaurentPoly>& values, std::size_t trials, std::uint64_t seed) {
  CoprimalityVerdict v;
  std::vector<LaurentPoly> nz;
  for (const auto& p : values)
    if (!p.is_zero()) nz.push_back(p);
  if (nz.empty()) {
    v.witness = "all values are zero";
    return v;
  }
  for (const auto& p : nz) {
    if (p.is_constant()) {
      v.outcome = CoprimalityVerdict::Outcome::ProbablyCoprime;
      v.witness = "unit " + p.to_string() + " present";
      return v;
    }
  }
  const VarTable& vars = nz.front().vars();

  // shared monomial content
  Monomial content = nz.front().min_exponents();
  for (const auto& p : nz) content = Monomial::min(content, p.min_exponents());
  for (auto& e : content.e) e = std::max<std::int16_t>(e, 0);
  if (!content.is_one()) {
    LaurentPoly f = LaurentPoly::monomial(content, Rational(1), vars);
    bool all = std::all_of(nz.begin(), nz.end(), [&](const LaurentPoly& p) { return try_exact_div(p, f).has_value(); });
    if (all) {
      v.outcome = CoprimalityVerdict::Outcome::NotCoprime;
      v.witness = f.to_string();
      return v;
    }
  }

  // variables present
  std::vector<std::size_t> present;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    bool used = std::any_of(nz.begin(), nz.end(), [&](const LaurentPoly& p) {
      return std::any_of(p.terms().begin(), p.terms().end(), [&](const auto& t) { return t.mono.e[i] != 0; });
    });
    if (used) present.push_back(i);
  }

  // shared linear factors v - c for small c
  for (std::size_t idx : present) {
    LaurentPoly xv = LaurentPoly::variable(vars.name(idx), vars);
    for (long c = -3; c <= 3; ++c) {
      if (c == 0) continue;
      LaurentPoly f = xv - LaurentPoly(Rational(c), vars);
      bool all = std::all_of(nz.begin(), nz.end(), [&](const LaurentPoly& p) { return try_exact_div(p, f).has_value(); });
      if (all) {
        v.outcome = CoprimalityVerdict::Outcome::NotCoprime;
        v.witness = f.to_string();
        return v;
      }
    }
  }

  // random univariate images
  std::mt19937_64 rng(seed);
  auto draw = [&] { return Rational(static_cast<long>(rng() % 2001) - 1000); };
  std::size_t settled = 0;
  for (std::size_t main : present) {
    bool trivial = false;
    for (std::size_t t = 0; t < trials && !trivial; ++t) {
      ++v.trials;
      Assignment<Rational> point;
      for (std::size_t other : present) {
        if (other == main) continue;
        Rational val = draw();
        if (val == 0) val = 1;
        point.emplace(std::string(vars.name(other)), val);
      }
      std::vector<UPoly> images;
      bool ok = true;
      for (const auto& p : nz) {
        auto u = to_upoly(specialize(p, point), main);
        if (!u) {
          ok = false;
          break;
        }
        images.push_back(std::move(*u));
      }
      if (ok && gcd_degree(std::move(images)) == 0) trivial = true;
    }
    if (trivial) ++settled;
  }
  if (settled == present.size()) {
    v.outcome = CoprimalityVerdict::Outcome::ProbablyCoprime;
    v.witness = "trivial univariate gcd in every variable";
  } else {
    v.witness = "nontrivial univariate gcd persisted in " + std::to_string(present.size() - settled) + " variable(s)";
  }
  return v;
}

}  // namespace somos
