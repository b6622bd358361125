#include "somos/laurent_poly.hpp"

#include "somos/errors.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>
#include <unordered_map>

namespace somos {

// ---------------------------------------------------------------------------
// Monomial arithmetic

namespace {

std::int16_t checked_exponent(int v) {
  if (v > std::numeric_limits<std::int16_t>::max() || v < std::numeric_limits<std::int16_t>::min())
    throw ExponentOverflow("monomial exponent out of range: " + std::to_string(v));
  return static_cast<std::int16_t>(v);
}

}  // namespace

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) m.e[i] = checked_exponent(a.e[i] + b.e[i]);
  return m;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) m.e[i] = checked_exponent(a.e[i] - b.e[i]);
  return m;
}

Monomial Monomial::pow(long k) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) m.e[i] = checked_exponent(static_cast<int>(e[i] * k));
  return m;
}

// ---------------------------------------------------------------------------

namespace {

void require_same_table(const VarTable& a, const VarTable& b) {
  if (!(a == b)) throw VarTableMismatch("operands use different variable tables");
}

bool descending(const Monomial& a, const Monomial& b) { return grlex_compare(a, b) > 0; }

// acc += a * b without materializing an expression temporary per call.
template <class C>
struct MulAdd {
  void add(C& acc, const C& a, const C& b) { acc += a * b; }
  void sub(C& acc, const C& a, const C& b) { acc -= a * b; }
};

template <>
struct MulAdd<Rational> {
  Rational tmp;
  void add(Rational& acc, const Rational& a, const Rational& b) {
    mpq_mul(tmp.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
    mpq_add(acc.get_mpq_t(), acc.get_mpq_t(), tmp.get_mpq_t());
  }
  void sub(Rational& acc, const Rational& a, const Rational& b) {
    mpq_mul(tmp.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
    mpq_sub(acc.get_mpq_t(), acc.get_mpq_t(), tmp.get_mpq_t());
  }
};

struct HeapEntry {
  Monomial mono;
  std::uint32_t i;
  std::uint32_t j;
};

struct HeapLess {
  bool operator()(const HeapEntry& a, const HeapEntry& b) const {
    return grlex_compare(a.mono, b.mono) < 0;
  }
};

using ProductHeap = std::priority_queue<HeapEntry, std::vector<HeapEntry>, HeapLess>;

}  // namespace

// ---------------------------------------------------------------------------
// Construction

template <class C>
BasicLaurentPoly<C>::BasicLaurentPoly(const C& constant, VarTable vars) : vars_(std::move(vars)) {
  if (!somos::is_zero(constant)) terms_.push_back({Monomial{}, constant});
}

template <class C>
BasicLaurentPoly<C> BasicLaurentPoly<C>::variable(std::string_view name, VarTable vars) {
  Monomial m;
  m.e[vars.require(name)] = 1;
  return monomial(m, C(1), std::move(vars));
}

template <class C>
BasicLaurentPoly<C> BasicLaurentPoly<C>::monomial(const Monomial& m, const C& coeff, VarTable vars) {
  for (std::size_t i = vars.size(); i < kMaxVars; ++i)
    if (m.e[i] != 0) throw VarTableMismatch("monomial uses a slot outside the variable table");
  BasicLaurentPoly p(std::move(vars));
  if (!somos::is_zero(coeff)) p.terms_.push_back({m, coeff});
  return p;
}

template <class C>
BasicLaurentPoly<C> BasicLaurentPoly<C>::from_terms(std::vector<Term> terms, VarTable vars) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return descending(a.mono, b.mono); });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    for (std::size_t i = vars.size(); i < kMaxVars; ++i)
      if (t.mono.e[i] != 0) throw VarTableMismatch("term uses a slot outside the variable table");
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && somos::is_zero(out.back().coeff)) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && somos::is_zero(out.back().coeff)) out.pop_back();
  return from_canonical_terms(std::move(out), std::move(vars));
}

template <class C>
std::optional<C> BasicLaurentPoly<C>::constant_value() const {
  if (terms_.empty()) return C(0);
  if (terms_.size() == 1 && terms_.front().mono.is_one()) return terms_.front().coeff;
  return std::nullopt;
}

template <class C>
C BasicLaurentPoly<C>::constant_term() const {
  for (const auto& t : terms_)
    if (t.mono.is_one()) return t.coeff;
  return C(0);
}

template <class C>
Monomial BasicLaurentPoly<C>::min_exponents() const {
  if (terms_.empty()) return {};
  Monomial m = terms_.front().mono;
  for (const auto& t : terms_) m = Monomial::min(m, t.mono);
  return m;
}

template <class C>
Monomial BasicLaurentPoly<C>::max_exponents() const {
  if (terms_.empty()) return {};
  Monomial m = terms_.front().mono;
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < kMaxVars; ++i) m.e[i] = std::max(m.e[i], t.mono.e[i]);
  return m;
}

// ---------------------------------------------------------------------------
// Ring operations

template <class C>
BasicLaurentPoly<C> BasicLaurentPoly<C>::operator-() const {
  BasicLaurentPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

namespace {

template <class C, bool Subtract>
BasicLaurentPoly<C> merge_terms(const BasicLaurentPoly<C>& a, const BasicLaurentPoly<C>& b) {
  using Term = typename BasicLaurentPoly<C>::Term;
  require_same_table(a.vars(), b.vars());
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  std::vector<Term> out;
  out.reserve(ta.size() + tb.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < ta.size() && j < tb.size()) {
    int cmp = grlex_compare(ta[i].mono, tb[j].mono);
    if (cmp > 0) {
      out.push_back(ta[i++]);
    } else if (cmp < 0) {
      out.push_back(tb[j++]);
      if constexpr (Subtract) out.back().coeff = -out.back().coeff;
    } else {
      C c = ta[i].coeff;
      if constexpr (Subtract) {
        c -= tb[j].coeff;
      } else {
        c += tb[j].coeff;
      }
      if (!somos::is_zero(c)) out.push_back({ta[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  for (; i < ta.size(); ++i) out.push_back(ta[i]);
  for (; j < tb.size(); ++j) {
    out.push_back(tb[j]);
    if constexpr (Subtract) out.back().coeff = -out.back().coeff;
  }
  return BasicLaurentPoly<C>::from_canonical_terms(std::move(out), a.vars());
}

}  // namespace

template <class C>
BasicLaurentPoly<C> operator+(const BasicLaurentPoly<C>& a, const BasicLaurentPoly<C>& b) {
  return merge_terms<C, false>(a, b);
}

template <class C>
BasicLaurentPoly<C> operator-(const BasicLaurentPoly<C>& a, const BasicLaurentPoly<C>& b) {
  return merge_terms<C, true>(a, b);
}

template <class C>
BasicLaurentPoly<C> operator*(const BasicLaurentPoly<C>& a, const BasicLaurentPoly<C>& b) {
  using Poly = BasicLaurentPoly<C>;
  using Term = typename Poly::Term;
  require_same_table(a.vars(), b.vars());
  if (a.is_zero() || b.is_zero()) return Poly(a.vars());
  if (a.is_monomial()) return b.shifted(a.leading().mono).scaled(a.leading().coeff);
  if (b.is_monomial()) return a.shifted(b.leading().mono).scaled(b.leading().coeff);

  // Johnson's heap multiplication: one stream per term of the shorter factor.
  const auto& small = a.size() <= b.size() ? a.terms() : b.terms();
  const auto& large = a.size() <= b.size() ? b.terms() : a.terms();
  ProductHeap heap;
  {
    std::vector<HeapEntry> init;
    init.reserve(small.size());
    for (std::uint32_t i = 0; i < small.size(); ++i) init.push_back({small[i].mono * large[0].mono, i, 0});
    heap = ProductHeap(HeapLess{}, std::move(init));
  }
  std::vector<Term> out;
  out.reserve(small.size() + large.size());
  MulAdd<C> fma;
  while (!heap.empty()) {
    Monomial m = heap.top().mono;
    C acc(0);
    while (!heap.empty() && heap.top().mono == m) {
      HeapEntry e = heap.top();
      heap.pop();
      fma.add(acc, small[e.i].coeff, large[e.j].coeff);
      if (e.j + 1 < large.size()) heap.push({small[e.i].mono * large[e.j + 1].mono, e.i, e.j + 1});
    }
    if (!somos::is_zero(acc)) out.push_back({m, std::move(acc)});
  }
  return Poly::from_canonical_terms(std::move(out), a.vars());
}

template <class C>
BasicLaurentPoly<C> BasicLaurentPoly<C>::scaled(const C& c) const {
  if (somos::is_zero(c)) return BasicLaurentPoly(vars_);
  BasicLaurentPoly r = *this;
  if (somos::is_one(c)) return r;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

template <class C>
BasicLaurentPoly<C> BasicLaurentPoly<C>::shifted(const Monomial& m) const {
  BasicLaurentPoly r = *this;
  if (m.is_one()) return r;
  for (auto& t : r.terms_) t.mono = t.mono * m;
  return r;
}

template <class C>
BasicLaurentPoly<C> BasicLaurentPoly<C>::pow(unsigned k) const {
  BasicLaurentPoly result(C(1), vars_);
  BasicLaurentPoly base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k) base = base * base;
  }
  return result;
}

template <class C>
BasicLaurentPoly<C> BasicLaurentPoly<C>::rebased(const VarTable& target) const {
  if (vars_ == target) return *this;
  std::array<std::size_t, kMaxVars> map{};
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto idx = target.index_of(vars_.name(i));
    if (!idx) {
      bool used = std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.mono.e[i] != 0; });
      if (used) throw VarTableMismatch("variable '" + vars_.name(i) + "' missing from target table");
      map[i] = kMaxVars;
      continue;
    }
    map[i] = *idx;
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (map[i] < kMaxVars) m.e[map[i]] = t.mono.e[i];
    out.push_back({m, t.coeff});
  }
  return from_terms(std::move(out), target);
}

template <class C>
std::size_t BasicLaurentPoly<C>::hash() const {
  return std::hash<std::string>{}(to_string());
}

// ---------------------------------------------------------------------------
// Exact division

template <class C>
std::optional<BasicLaurentPoly<C>> try_exact_div(const BasicLaurentPoly<C>& a,
                                                 const BasicLaurentPoly<C>& b) {
  using Poly = BasicLaurentPoly<C>;
  using Term = typename Poly::Term;
  require_same_table(a.vars(), b.vars());
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.is_zero()) return Poly(a.vars());
  const Term& lb = b.leading();
  if (b.is_monomial()) {
    Monomial inv = Monomial{} / lb.mono;
    return a.shifted(inv).scaled(C(1) / lb.coeff);
  }

  // Quotient monomials must dominate `bound` once both operands are shifted
  // into the polynomial ring with the divisor's monomial content removed.
  const Monomial bound = a.min_exponents() / b.min_exponents();
  if (!Monomial::dominates(a.leading().mono / lb.mono, bound)) return std::nullopt;
  if (!Monomial::dominates(a.trailing().mono / b.trailing().mono, bound)) return std::nullopt;
  if (a.size() < 2) return std::nullopt;  // a monomial is never a multiple of a non-monomial

  const auto& ta = a.terms();
  const auto& tb = b.terms();
  const C inv_lc = C(1) / lb.coeff;
  std::vector<Term> q;
  ProductHeap heap;
  MulAdd<C> fma;
  std::size_t ai = 0;
  while (ai < ta.size() || !heap.empty()) {
    Monomial m;
    if (ai < ta.size() && (heap.empty() || grlex_compare(ta[ai].mono, heap.top().mono) >= 0)) {
      m = ta[ai].mono;
    } else {
      m = heap.top().mono;
    }
    C c(0);
    if (ai < ta.size() && ta[ai].mono == m) c = ta[ai++].coeff;
    while (!heap.empty() && heap.top().mono == m) {
      HeapEntry e = heap.top();
      heap.pop();
      fma.sub(c, q[e.i].coeff, tb[e.j].coeff);
      if (e.j + 1 < tb.size()) heap.push({q[e.i].mono * tb[e.j + 1].mono, e.i, e.j + 1});
    }
    if (somos::is_zero(c)) continue;
    Monomial qm = m / lb.mono;
    if (!Monomial::dominates(qm, bound)) return std::nullopt;
    c *= inv_lc;
    q.push_back({qm, std::move(c)});
    heap.push({qm * tb[1].mono, static_cast<std::uint32_t>(q.size() - 1), 1});
  }
  return Poly::from_canonical_terms(std::move(q), a.vars());
}

template <class C>
BasicLaurentPoly<C> exact_div(const BasicLaurentPoly<C>& a, const BasicLaurentPoly<C>& b) {
  auto q = try_exact_div(a, b);
  if (!q) throw NotDivisible("not divisible: (" + a.to_string() + ") / (" + b.to_string() + ")");
  return std::move(*q);
}

template <class C>
BasicLaurentPoly<C> sum(const std::vector<BasicLaurentPoly<C>>& parts, const VarTable& vars) {
  using Poly = BasicLaurentPoly<C>;
  using Term = typename Poly::Term;
  std::unordered_map<Monomial, C, MonomialHash> acc;
  for (const auto& p : parts) {
    require_same_table(p.vars(), vars);
    for (const auto& t : p.terms()) {
      auto [it, inserted] = acc.try_emplace(t.mono, t.coeff);
      if (!inserted) it->second += t.coeff;
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!somos::is_zero(c)) terms.push_back({m, std::move(c)});
  return Poly::from_terms(std::move(terms), vars);
}

// ---------------------------------------------------------------------------
// Evaluation and specialization

namespace {

template <class T, class C>
T evaluate_impl(const BasicLaurentPoly<C>& p, const Assignment<T>& values) {
  const VarTable& vars = p.vars();
  std::array<const T*, kMaxVars> slot{};
  for (std::size_t i = 0; i < vars.size(); ++i) {
    auto it = values.find(vars.name(i));
    slot[i] = it == values.end() ? nullptr : &it->second;
  }
  for (const auto& [name, value] : values) {
    (void)value;
    vars.require(name);
  }
  std::map<std::pair<std::size_t, int>, T> powers;
  T total(0);
  for (const auto& t : p.terms()) {
    T term(t.coeff);
    for (std::size_t i = 0; i < vars.size(); ++i) {
      int e = t.mono.e[i];
      if (e == 0) continue;
      if (!slot[i]) throw UnassignedVariable("no value for variable '" + vars.name(i) + "'");
      if (e < 0 && is_zero(*slot[i]))
        throw ZeroAtNegativeExponent("variable '" + vars.name(i) + "' is zero but appears with exponent " +
                                     std::to_string(e));
      auto key = std::make_pair(i, e);
      auto it = powers.find(key);
      if (it == powers.end()) it = powers.emplace(key, pow(*slot[i], e)).first;
      term *= it->second;
    }
    total += term;
  }
  return total;
}

template <class T, class C>
BasicLaurentPoly<T> specialize_impl(const BasicLaurentPoly<C>& p, const Assignment<T>& values) {
  using Out = BasicLaurentPoly<T>;
  const VarTable& vars = p.vars();
  std::array<const T*, kMaxVars> slot{};
  for (const auto& [name, value] : values) slot[vars.require(name)] = &value;
  std::vector<typename Out::Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    T c(t.coeff);
    Monomial m = t.mono;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (!slot[i] || m.e[i] == 0) continue;
      if (m.e[i] < 0 && is_zero(*slot[i]))
        throw ZeroAtNegativeExponent("variable '" + vars.name(i) + "' is zero but appears with exponent " +
                                     std::to_string(m.e[i]));
      c *= pow(*slot[i], m.e[i]);
      m.e[i] = 0;
    }
    terms.push_back({m, std::move(c)});
  }
  return Out::from_terms(std::move(terms), vars);
}

}  // namespace

Rational evaluate(const LaurentPoly& p, const Assignment<Rational>& values) {
  return evaluate_impl<Rational>(p, values);
}
GaussianRational evaluate(const LaurentPoly& p, const Assignment<GaussianRational>& values) {
  return evaluate_impl<GaussianRational>(p, values);
}
GaussianRational evaluate(const GaussianPoly& p, const Assignment<GaussianRational>& values) {
  return evaluate_impl<GaussianRational>(p, values);
}

LaurentPoly specialize(const LaurentPoly& p, const Assignment<Rational>& values) {
  return specialize_impl<Rational>(p, values);
}
GaussianPoly specialize(const LaurentPoly& p, const Assignment<GaussianRational>& values) {
  return specialize_impl<GaussianRational>(p, values);
}
GaussianPoly specialize(const GaussianPoly& p, const Assignment<GaussianRational>& values) {
  return specialize_impl<GaussianRational>(p, values);
}

GaussianPoly to_gaussian(const LaurentPoly& p) { return specialize_impl<GaussianRational>(p, {}); }

// ---------------------------------------------------------------------------
// Classification and root reduction

bool ClassReport::polynomial() const noexcept {
  return std::all_of(vars.begin(), vars.end(), [](const VarClass& v) { return v.polynomial(); });
}

const VarClass& ClassReport::at(std::string_view name) const {
  for (const auto& v : vars)
    if (v.name == name) return v;
  throw UnknownVariable("variable '" + std::string(name) + "' was not classified");
}

template <class C>
ClassReport classify(const BasicLaurentPoly<C>& p, const std::vector<std::string>& vars) {
  ClassReport report;
  for (const auto& name : vars) {
    std::size_t idx = p.vars().require(name);
    VarClass vc{name, 0, 0, true};
    bool first = true;
    for (const auto& t : p.terms()) {
      int e = t.mono.e[idx];
      if (first) {
        vc.min_exponent = vc.max_exponent = e;
        first = false;
      } else {
        vc.min_exponent = std::min(vc.min_exponent, e);
        vc.max_exponent = std::max(vc.max_exponent, e);
      }
      if (e % 2 != 0) vc.all_even = false;
    }
    report.vars.push_back(std::move(vc));
  }
  return report;
}

template <class C>
BasicLaurentPoly<C> reduce_root(const BasicLaurentPoly<C>& p, std::string_view root,
                                const BasicLaurentPoly<C>& square) {
  using Poly = BasicLaurentPoly<C>;
  require_same_table(p.vars(), square.vars());
  if (!square.is_monomial()) throw Error("root reduction needs a monomial square");
  std::size_t idx = p.vars().require(root);
  const auto& sq = square.leading();
  if (sq.mono.e[idx] != 0) throw Error("square of a root may not involve the root itself");
  std::vector<typename Poly::Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    int e = t.mono.e[idx];
    int k = e >= 0 ? e / 2 : -((1 - e) / 2);
    if (k == 0) {
      terms.push_back(t);
      continue;
    }
    Monomial m = t.mono;
    m.e[idx] = static_cast<std::int16_t>(e - 2 * k);
    m = m * sq.mono.pow(k);
    terms.push_back({m, t.coeff * pow(sq.coeff, k)});
  }
  return Poly::from_terms(std::move(terms), p.vars());
}

// ---------------------------------------------------------------------------
// Instantiations

#define SOMOS_INSTANTIATE(C)                                                                     \
  template class BasicLaurentPoly<C>;                                                            \
  template BasicLaurentPoly<C> operator+(const BasicLaurentPoly<C>&, const BasicLaurentPoly<C>&); \
  template BasicLaurentPoly<C> operator-(const BasicLaurentPoly<C>&, const BasicLaurentPoly<C>&); \
  template BasicLaurentPoly<C> operator*(const BasicLaurentPoly<C>&, const BasicLaurentPoly<C>&); \
  template std::optional<BasicLaurentPoly<C>> try_exact_div(const BasicLaurentPoly<C>&,          \
                                                            const BasicLaurentPoly<C>&);         \
  template BasicLaurentPoly<C> exact_div(const BasicLaurentPoly<C>&, const BasicLaurentPoly<C>&); \
  template BasicLaurentPoly<C> sum(const std::vector<BasicLaurentPoly<C>>&, const VarTable&);    \
  template ClassReport classify(const BasicLaurentPoly<C>&, const std::vector<std::string>&);    \
  template BasicLaurentPoly<C> reduce_root(const BasicLaurentPoly<C>&, std::string_view,         \
                                           const BasicLaurentPoly<C>&);

SOMOS_INSTANTIATE(Rational)
SOMOS_INSTANTIATE(GaussianRational)

#undef SOMOS_INSTANTIATE

}  // namespace somos
