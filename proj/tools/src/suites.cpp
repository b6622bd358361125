#include "somos_cli/suites.hpp"

#include "somos_cli/pool.hpp"

#include <somos/a1q_identities.hpp>
#include <somos/bilinear_checks.hpp>
#include <somos/coeff_seq.hpp>
#include <somos/hankel.hpp>
#include <somos/invariants.hpp>
#include <somos/poly_verify.hpp>
#include <somos/recurrences.hpp>
#include <somos/series.hpp>
#include <somos/sx_engine.hpp>

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace somos::cli {

namespace {

LaurentPoly num(long v) { return LaurentPoly(Rational(v)); }
LaurentPoly var(const char* n) { return LaurentPoly::variable(n); }

template <class P>
void expect_eq(VerdictReport& r, std::string key, const P& got, const P& want) {
  if (got == want) {
    r.pass(std::move(key));
  } else {
    r.fail(std::move(key), "got " + got.to_string() + ", expected " + want.to_string());
  }
}

void expect(VerdictReport& r, std::string key, bool ok, const std::string& witness) {
  if (ok) {
    r.pass(std::move(key));
  } else {
    r.fail(std::move(key), witness);
  }
}

std::string nkey(const char* label, std::size_t n) { return index_key(label, static_cast<long>(n)); }

// ---------------------------------------------------------------------------
// Hankel determinant formulas

std::vector<Task> plan_somos4_hankel(const SuiteContext& ctx) {
  const std::size_t n_max = ctx.depth_or(8);
  const Symbols s = ctx.sym;
  return {
      {"det",
       [=] {
         VerdictReport r;
         auto seq = somos4_seq({s.alpha(), s.beta, {num(1), num(1), s.x, s.y}}, n_max + 1);
         CoeffSeq p = somos4_entries(s.x, s.y, s.beta, s.sqrt_alpha);
         for (std::size_t n = 1; n <= n_max; ++n) expect_eq(r, nkey("n", n), det_bareiss(hankel_matrix(p, n)), seq[n + 1]);
         return r;
       }},
      {"series",
       [=] {
         VerdictReport r;
         const std::size_t prec = std::min<std::size_t>(2 * n_max - 1, 11);
         FunctionalEquationData fe = somos4_initials(s.x, s.y, s.beta, s.sqrt_alpha);
         TruncatedSeries q = series_compose_fe(fe, prec);
         CoeffSeq p = somos4_entries(s.x, s.y, s.beta, s.sqrt_alpha);
         for (std::size_t m = 0; m < prec; ++m) expect_eq(r, nkey("m", m), q[m], p.term(m));
         TruncatedSeries res = fe_residual(fe, q);
         expect(r, "residual", res.valuation() >= prec,
                "residual coefficient " + std::to_string(res.valuation()) + " is nonzero");
         return r;
       }},
  };
}

std::vector<Task> plan_somos5_hankel(const SuiteContext& ctx) {
  const std::size_t n_max = ctx.depth_or(4);
  const Symbols s = ctx.sym;
  auto half = [=](bool odd) {
    return [=] {
      VerdictReport r;
      auto seq = somos5_seq({s.alpha_t, s.beta_t, {num(1), num(1), s.x, s.y, s.z}}, 2 * n_max + 3);
      auto [p, q] = somos5_entries(s.x, s.y, s.z, s.alpha_t, s.beta_t);
      const LaurentPoly& lead = odd ? s.y : s.x;
      const CoeffSeq& entries = odd ? q : p;
      for (std::size_t n = 0; n <= n_max; ++n) {
        LaurentPoly got = lead.pow(static_cast<unsigned>(n + 1)) * det_bareiss(hankel_matrix(entries, n));
        expect_eq(r, nkey("n", n), got, seq[2 * n + (odd ? 3 : 2)]);
      }
      return r;
    };
  };
  return {{"p", half(false)}, {"q", half(true)}};
}

std::vector<LaurentPoly> a1q_run(const LaurentPoly& x, const LaurentPoly& beta, std::size_t n) {
  return a1q_seq({beta, {num(1), x}, std::nullopt}, n);
}

std::vector<Task> plan_a1q_hankel(const SuiteContext& ctx) {
  const std::size_t n_max = ctx.depth_or(10);
  const LaurentPoly x = ctx.sym.x, b = ctx.sym.beta;
  return {
      {"det",
       [=] {
         VerdictReport r;
         auto seq = a1q_run(x, b, n_max);
         CoeffSeq p = a1q_entries(x, b);
         for (std::size_t n = 1; n <= n_max; ++n) expect_eq(r, nkey("n", n), det_bareiss(hankel_matrix(p, n)), seq[n]);
         return r;
       }},
      {"alt",
       [=] {
         VerdictReport r;
         CoeffSeq p = a1q_entries(x, b), q = a1q_entries_alt(x, b);
         for (std::size_t m = 0; m <= 2 * n_max; ++m) expect_eq(r, nkey("m", m), q.term(m), p.term(m));
         return r;
       }},
      {"shifted",
       [=] {
         VerdictReport r;
         CoeffSeq p = a1q_entries(x, b);
         auto h0 = shifted_hankel_run(p, n_max, 0);
         auto h1 = shifted_hankel_run(p, n_max, 1);
         auto h2 = shifted_hankel_run(p, n_max, 2);
         for (std::size_t n = 0; n <= n_max; ++n) expect_eq(r, nkey("h1 n", n), h1[n], num(1));
         // H_{-1} = 0
         for (std::size_t n = 1; n <= n_max; ++n) {
           LaurentPoly h2m2 = n >= 2 ? h2[n - 2] : LaurentPoly();
           expect_eq(r, nkey("h0-beta n", n), h0[n], x * h0[n - 1] + b * h2m2);
         }
         for (std::size_t n = 2; n <= n_max; ++n)
           expect_eq(r, nkey("h0-h2 n", n), h0[n], x * h2[n - 1] - h2[n - 2]);
         return r;
       }},
  };
}

std::vector<Task> plan_jacobi(const SuiteContext& ctx) {
  const std::size_t n_max = ctx.depth_or(6);
  const LaurentPoly x = ctx.sym.x, b = ctx.sym.beta;
  return {{"",
           [=] {
             VerdictReport r;
             CoeffSeq p = a1q_entries(x, b);
             auto h0 = shifted_hankel_run(p, n_max, 0);
             auto h1 = shifted_hankel_run(p, n_max, 1);
             auto h2 = shifted_hankel_run(p, n_max, 2);
             for (std::size_t n = 2; n <= n_max; ++n)
               expect_eq(r, nkey("n", n), h0[n] * h2[n - 2], h0[n - 1] * h2[n - 1] - h1[n - 1] * h1[n - 1]);
             return r;
           }}};
}

// ---------------------------------------------------------------------------
// Quadratic transformation engine

VerdictReport product_vs_det(const FunctionalEquationData& fe, std::size_t n_max) {
  VerdictReport r;
  SXTrajectory t = SXTrajectory::run(SXState::from(fe), n_max > 0 ? n_max - 1 : 0);
  CoeffSeq q = CoeffSeq::from_series(fe);
  for (std::size_t n = 0; n <= n_max; ++n) {
    RatFunc prod = sx_hankel_product(t, n);
    LaurentPoly det = det_bareiss(hankel_matrix(q, n));
    expect(r, nkey("product n", n), prod == RatFunc(det), "product " + prod.to_string() + " vs det " + det.to_string());
  }
  return r;
}

std::vector<Task> plan_sx_lemma(const SuiteContext& ctx) {
  const std::size_t n_max = ctx.depth_or(6);
  const Symbols s = ctx.sym;
  return {
      {"somos4",
       [=] {
         VerdictReport r;
         FunctionalEquationData fe = somos4_initials(s.x, s.y, s.beta, s.sqrt_alpha);
         SXTrajectory t = SXTrajectory::run(SXState::from(fe), n_max);
         expect(r, "a1", t[1].a == RatFunc::fraction(s.y, s.x * s.x), "a1 = " + t[1].a.to_string());
         LaurentPoly f1_num = s.beta * s.x * s.x - s.y * s.y + s.alpha() * s.x.pow(3);
         expect(r, "f1", t[1].f == RatFunc::fraction(f1_num, s.sqrt_alpha * s.x * s.y), "f1 = " + t[1].f.to_string());
         r.absorb(sx_structure_check(t), "structure");
         SomosParams p{s.alpha(), s.beta, {num(1), num(1), s.x, s.y}};
         r.absorb(sx_a_recursion_check(t, p), "a-recursion");
         auto seq = somos4_seq(p, n_max + 1);
         CoeffSeq q = CoeffSeq::from_series(fe);
         for (std::size_t n = 0; n <= n_max; ++n) {
           RatFunc prod = sx_hankel_product(t, n);
           LaurentPoly det = det_bareiss(hankel_matrix(q, n));
           expect(r, nkey("product n", n), prod == RatFunc(det) && det == seq[n + 1],
                  "product " + prod.to_string() + ", det " + det.to_string() + ", S " + seq[n + 1].to_string());
         }
         return r;
       }},
      {"a1q-g", [=] { return product_vs_det(a1q_shift_initials(s.x, s.beta), n_max); }},
      {"family k=-1 f0=1",
       [=] { return product_vs_det(somos4_family_initials(s.x, s.y, s.beta, s.sqrt_alpha, {-1, num(1)}), n_max); }},
      {"family k=1 f0=x",
       [=] { return product_vs_det(somos4_family_initials(s.x, s.y, s.beta, s.sqrt_alpha, {1, s.x}), n_max); }},
  };
}

std::vector<Task> plan_sx_closed(const SuiteContext& ctx) {
  const std::size_t n_max = ctx.depth_or(4);
  const Symbols s = ctx.sym;
  auto closed = [n_max](FunctionalEquationData fe) {
    return [n_max, fe] { return sx_closed_identity_check(SXTrajectory::run(SXState::from(fe), n_max + 2), n_max); };
  };
  return {
      {"somos4", closed(somos4_initials(s.x, s.y, s.beta, s.sqrt_alpha))},
      {"family k=-1 f0=1", closed(somos4_family_initials(s.x, s.y, s.beta, s.sqrt_alpha, {-1, num(1)}))},
      {"a1q-g", closed(a1q_shift_initials(s.x, s.beta))},
  };
}

std::vector<Task> plan_shift_transform(const SuiteContext& ctx) {
  const std::size_t n_max = ctx.depth_or(6);
  const LaurentPoly x = ctx.sym.x, b = ctx.sym.beta;
  return {
      {"symbolic", [=] { return sx_shift_transform_check(x, b, n_max); }},
      {"numeric", [=] { return sx_shift_transform_check(num(1), num(1), n_max); }},
  };
}

std::vector<Task> plan_family(const SuiteContext& ctx) {
  const std::size_t n_max = ctx.depth_or(5);
  const Symbols s = ctx.sym;
  std::vector<Task> tasks;
  tasks.push_back({"base data", [=] {
                     VerdictReport r;
                     bool same = somos4_family_initials(s.x, s.y, s.beta, s.sqrt_alpha, {1, LaurentPoly()}) ==
                                 somos4_initials(s.x, s.y, s.beta, s.sqrt_alpha);
                     expect(r, "k=1 f0=0", same, "family member differs from the base initial data");
                     return r;
                   }});
  for (int k : {1, -1}) {
    for (int which = 0; which < 3; ++which) {
      LaurentPoly f0 = which == 0 ? LaurentPoly() : which == 1 ? num(1) : s.x;
      std::string label = "k=" + std::to_string(k) + " f0=" + (which == 0 ? "0" : which == 1 ? "1" : "x");
      tasks.push_back({label, [=] {
                         VerdictReport r;
                         auto seq = somos4_seq({s.alpha(), s.beta, {num(1), num(1), s.x, s.y}}, n_max + 1);
                         CoeffSeq q = CoeffSeq::from_series(
                             somos4_family_initials(s.x, s.y, s.beta, s.sqrt_alpha, {k, f0}));
                         for (std::size_t n = 1; n <= n_max; ++n) {
                           LaurentPoly det = det_bareiss(hankel_matrix(q, n));
                           if (det.is_zero()) {
                             r.fail(nkey("n", n), "nonzero pivot violated: H_" + std::to_string(n) + " = 0");
                           } else {
                             expect_eq(r, nkey("n", n), det, seq[n + 1]);
                           }
                         }
                         return r;
                       }});
    }
  }
  return tasks;
}

// ---------------------------------------------------------------------------
// Somos-5 bridge

std::vector<LaurentPoly> somos5_run(const Symbols& s, std::size_t n_max) {
  return somos5_seq({s.alpha_t, s.beta_t, {num(1), num(1), s.x, s.y, s.z}}, 2 * n_max + 1);
}

std::vector<Task> plan_backlund(const SuiteContext& ctx) {
  const std::size_t n_max = ctx.depth_or(5);
  const Symbols s = ctx.sym;
  return {
      {"coupled",
       [=] {
         auto [f, g] = split_even_odd(somos5_run(s, n_max));
         const LaurentPoly& A = s.alpha_t;
         const LaurentPoly& B = s.beta_t;
         return check_bt_pair(f, g, {A, B, A * B}, B * B);
       }},
      {"induced",
       [=] {
         VerdictReport r;
         auto [f, g] = split_even_odd(somos5_run(s, n_max));
         SomosParams p = induced_somos4_params(s.x, s.y, s.z, s.alpha_t, s.beta_t);
         expect_eq(r, "alpha", p.alpha, s.beta_t * s.beta_t);
         r.absorb(somos4_residual_check(f, p.alpha, p.beta), "even");
         r.absorb(somos4_residual_check(g, p.alpha, p.beta), "odd");
         return r;
       }},
  };
}

std::vector<Task> plan_even_elim(const SuiteContext& ctx) {
  const std::size_t n_max = ctx.depth_or(5);
  const Symbols s = ctx.sym;
  auto half = [=](bool odd) {
    return [=] {
      auto [f, g] = split_even_odd(somos5_run(s, n_max));
      return even_elimination_check(odd ? g : f, s.alpha_t, s.beta_t);
    };
  };
  return {{"even", half(false)}, {"odd", half(true)}};
}

// ---------------------------------------------------------------------------
// A1 Q-system special sequences

std::vector<Task> plan_three_term(const SuiteContext& ctx) {
  const std::size_t n_max = ctx.depth_or(10);
  const LaurentPoly x = ctx.sym.x, b = ctx.sym.beta;
  return {
      {"symbolic", [=] { return a1q_three_term_check(a1q_run(x, b, n_max), x, b); }},
      {"numeric",
       [=] {
         VerdictReport r;
         auto seq = a1q_run(num(1), num(1), n_max);
         const long oracle[] = {1, 1, 2, 5, 13, 34, 89};
         for (std::size_t n = 0; n < seq.size() && n < 7; ++n) expect_eq(r, nkey("value n", n), seq[n], num(oracle[n]));
         expect_eq(r, "coefficient", a1q_three_term_coefficient(num(1), num(1)), num(3));
         r.absorb(a1q_three_term_check(seq, num(1), num(1)), "recurrence");
         return r;
       }},
  };
}

std::vector<Task> plan_embedding(const SuiteContext& ctx) {
  const std::size_t n_max = ctx.depth_or(8);
  const LaurentPoly x = ctx.sym.x, b = ctx.sym.beta;
  return {
      {"symbolic", [=] { return a1q_somos4_embedding_check(a1q_run(x, b, n_max), x, b); }},
      {"numeric",
       [=] {
         VerdictReport r;
         LaurentPoly c = a1q_three_term_coefficient(num(1), num(1));
         expect_eq(r, "alpha", c * c, num(9));
         expect_eq(r, "beta", num(1) - c * c, num(-8));
         auto seq = a1q_run(num(1), num(1), n_max);
         r.absorb(somos4_residual_check(seq, c * c, num(1) - c * c), "somos4");
         return r;
       }},
  };
}

std::vector<Task> plan_chebyshev(const SuiteContext& ctx) {
  const std::size_t n_max = ctx.depth_or(8);
  const LaurentPoly x = ctx.sym.x;
  return {{"",
           [=] {
             VerdictReport r;
             LaurentPoly b = x * x - num(1);
             expect_eq(r, "coefficient", a1q_three_term_coefficient(x, b), num(2) * x);
             r.absorb(a1q_three_term_check(a1q_run(x, b, n_max), x, b), "recurrence");
             return r;
           }}};
}

std::vector<Task> plan_fibonacci(const SuiteContext& ctx) {
  const std::size_t n_max = ctx.depth_or(8);
  const GaussianRational i = GaussianRational::imaginary_unit();
  const Assignment<GaussianRational> at{{"x", -i}};
  auto fib = [](std::size_t n) {
    long a = 1, b = 1;
    for (std::size_t k = 0; k < n; ++k) {
      long t = a + b;
      a = b;
      b = t;
    }
    return a;
  };
  return {
      {"hankel",
       [=] {
         VerdictReport r;
         CoeffSeq p = a1q_entries(var("x"), num(-1));
         std::vector<GaussianPoly> entries;
         for (const auto& e : p.prefix(n_max > 0 ? 2 * n_max - 1 : 0)) entries.push_back(specialize(e, at));
         for (std::size_t n = 0; n < n_max; ++n) {
           SquareMatrix<GaussianPoly> m(n, GaussianPoly());
           for (std::size_t a = 0; a < n; ++a)
             for (std::size_t c = 0; c < n; ++c) m(a, c) = entries[a + c];
           GaussianPoly value = GaussianPoly(pow(i, static_cast<long>(n))) * det_bareiss(m);
           GaussianPoly want(GaussianRational(fib(n)));
           if (value == want) {
             r.pass(nkey("n", n), value.to_string());
           } else {
             r.fail(nkey("n", n), "i^n H_n = " + value.to_string() + ", expected " + want.to_string());
           }
         }
         return r;
       }},
      {"scaled",
       [=] {
         VerdictReport r;
         std::vector<GaussianPoly> s;
         for (const auto& t : a1q_run(var("x"), num(-1), n_max)) s.push_back(specialize(t, at));
         GaussianPoly g(i);
         auto f = scaled_a1q(s, g);
         for (std::size_t n = 0; n < f.size(); ++n) expect_eq(r, nkey("f n", n), f[n], GaussianPoly(GaussianRational(fib(n))));
         r.absorb(scaled_a1q_check(f, GaussianPoly(GaussianRational(-1)), g), "recurrence");
         return r;
       }},
  };
}

// ---------------------------------------------------------------------------
// Somos polynomials

std::string outcome_witness(const CoprimalityVerdict& v) {
  return std::string(to_string(v.outcome)) + ": " + v.witness;
}

std::vector<Task> plan_poly4(const SuiteContext& ctx) {
  const std::size_t n_max = ctx.depth_or(10);
  const std::uint64_t seed = ctx.seed;
  std::vector<Task> tasks;
  for (const auto& c : somos4_poly_cases()) {
    tasks.push_back({c.name, [=] {
                       VerdictReport r = verify_polynomial_case(c, n_max);
                       CoprimalityVerdict v = gcd_probe(c.init, 8, seed);
                       expect(r, "gcd hypothesis", v.outcome == CoprimalityVerdict::Outcome::ProbablyCoprime,
                              outcome_witness(v));
                       return r;
                     }});
  }
  tasks.push_back({"xyz", [=] {
                     PolyCase c = somos4_xyz_case();
                     VerdictReport r = verify_polynomial_case(c, n_max);
                     auto t = poly_case_terms(c, std::max<std::size_t>(n_max, 8));
                     LaurentPoly x = var("x"), y = var("y"), z = var("z");
                     expect_eq(r, "S_-1", t[0], x * z * (x + num(1)));
                     expect_eq(r, "S_4", t[5], y * z * (y + num(1)));
                     std::vector<LaurentPoly> fwd(t.begin() + 1, t.end());
                     LaurentPoly want = y * z + x * y + x * z + z;
                     for (const auto& v : invariant_T_run(fwd, c.alpha, c.beta, 5)) {
                       auto lp = v.value.as_laurent();
                       expect(r, nkey("T shift", v.start), lp && *lp == want, "T = " + v.value.to_string());
                     }
                     return r;
                   }});
  return tasks;
}

std::vector<Task> plan_poly5(const SuiteContext& ctx) {
  const std::size_t n_max = ctx.depth_or(10);
  const std::uint64_t seed = ctx.seed;
  std::vector<Task> tasks;
  for (const auto& c : somos5_poly_cases()) {
    tasks.push_back({c.name, [=] {
                       VerdictReport r = verify_polynomial_case(c, n_max);
                       CoprimalityVerdict v = gcd_probe(c.init, 8, seed);
                       expect(r, "gcd hypothesis", v.outcome == CoprimalityVerdict::Outcome::ProbablyCoprime,
                              outcome_witness(v));
                       return r;
                     }});
  }
  return tasks;
}

std::vector<Task> plan_corollary(const SuiteContext& ctx) {
  const std::size_t n_max = ctx.depth_or(5);
  return {
      {"det", [=] { return corollary_determinant_check(n_max); }},
      {"values",
       [] {
         VerdictReport r;
         LaurentPoly x = var("x"), y = var("y"), z = var("z");
         auto t = somos4_seq({x * y * z, x * y * z, {x, num(1), num(1), y}}, 5);
         expect_eq(r, "S_2", t[4], y * y * z + y * z);
         expect_eq(r, "S_3", t[5], x * y.pow(3) * z * z + x * y.pow(3) * z + x * y * y * z * z);
         return r;
       }},
  };
}

std::vector<Task> plan_strong_laurent(const SuiteContext& ctx) {
  const std::size_t n_max = ctx.depth_or(10);
  return {
      {"somos4", [=] { return strong_laurent_consequence_check(PolySystem::Somos4, n_max); }},
      {"somos5", [=] { return strong_laurent_consequence_check(PolySystem::Somos5, n_max); }},
      {"laurent",
       [=] {
         VerdictReport r;
         auto seq = somos4_seq({var("r").pow(2), var("b"), {num(1), num(1), var("x"), var("y")}}, n_max);
         for (std::size_t n = 0; n < seq.size(); ++n) {
           ClassReport cr = classify(seq[n], {"r", "b", "z", "w"});
           bool ok = cr.polynomial() && cr.at("r").all_even;
           expect(r, nkey("n", n), ok, "S_" + std::to_string(n) + " = " + seq[n].to_string());
         }
         return r;
       }},
  };
}

}  // namespace

const std::vector<Suite>& suite_registry() {
  static const std::vector<Suite> suites = {
      {"somos4-hankel", 8, plan_somos4_hankel},
      {"somos5-hankel", 4, plan_somos5_hankel},
      {"a1q-hankel", 10, plan_a1q_hankel},
      {"sx-lemma", 6, plan_sx_lemma},
      {"sx-closed", 4, plan_sx_closed},
      {"backlund", 5, plan_backlund},
      {"even-elim", 5, plan_even_elim},
      {"three-term", 10, plan_three_term},
      {"embedding", 8, plan_embedding},
      {"chebyshev", 8, plan_chebyshev},
      {"fibonacci", 8, plan_fibonacci},
      {"jacobi", 6, plan_jacobi},
      {"shift-transform", 6, plan_shift_transform},
      {"poly4-cases", 10, plan_poly4},
      {"poly5-cases", 10, plan_poly5},
      {"corollary-det", 5, plan_corollary},
      {"strong-laurent", 10, plan_strong_laurent},
      {"family-f0", 5, plan_family},
  };
  return suites;
}

const Suite* find_suite(std::string_view name) {
  for (const auto& s : suite_registry())
    if (s.name == name) return &s;
  return nullptr;
}

VerdictReport run_suite(std::string_view name, const SuiteContext& ctx, const RunOptions& opt) {
  std::vector<Task> tasks;
  auto add = [&](const Suite& s, bool prefixed) {
    for (auto& t : s.plan(ctx)) {
      std::string label = prefixed ? std::string(s.name) : std::string();
      if (!t.label.empty()) label += (label.empty() ? "" : "/") + t.label;
      tasks.push_back({std::move(label), std::move(t.run)});
    }
  };
  if (name == "all") {
    for (const auto& s : suite_registry()) add(s, true);
  } else if (const Suite* s = find_suite(name)) {
    add(*s, false);
  } else {
    throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
  }

  std::vector<VerdictReport> results(tasks.size());
  parallel_for(tasks.size(), opt.jobs, [&](std::size_t i) {
    auto start = std::chrono::steady_clock::now();
    VerdictReport part;
    try {
      part = tasks[i].run();
    } catch (const std::exception& e) {
      part.fail("error", e.what());
    }
    if (opt.timings) {
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
      for (auto& it : part.items) it.ms = ms;
    }
    results[i] = std::move(part);
  });

  VerdictReport report;
  report.suite = std::string(name);
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (tasks[i].label.empty()) {
      report.items.insert(report.items.end(), results[i].items.begin(), results[i].items.end());
    } else {
      report.absorb(results[i], tasks[i].label);
    }
  }
  std::stable_sort(report.items.begin(), report.items.end(),
                   [](const VerdictItem& a, const VerdictItem& b) { return a.key < b.key; });
  return report;
}

}  // namespace somos::cli
