#include "somos_cli/app.hpp"

#include "somos_cli/params.hpp"
#include "somos_cli/report.hpp"
#include "somos_cli/suites.hpp"

#include <somos/errors.hpp>
#include <somos/invariants.hpp>
#include <somos/recurrences.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace somos::cli {

namespace {

struct Options {
  std::string system = "somos4";
  std::string init;
  std::string alpha = "r^2";
  std::string beta = "b";
  std::string alpha_t = "a";
  std::string beta_t = "b";
  std::vector<std::string> bindings;
  std::optional<std::size_t> n;
  std::string format = "text";
  std::uint64_t seed = 1;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  std::string suite;
  bool timings = false;
};

template <std::size_t K>
std::array<LaurentPoly, K> init_array(const std::string& text, std::string_view system) {
  auto v = parse_list(text);
  if (v.size() != K) {
    throw ParseError(std::string(system) + " needs " + std::to_string(K) + " initial values, got " +
                     std::to_string(v.size()));
  }
  std::array<LaurentPoly, K> out;
  std::copy(v.begin(), v.end(), out.begin());
  return out;
}

std::vector<LaurentPoly> generate(const Options& o, std::size_t n) {
  if (o.system == "somos4") {
    return somos4_seq({parse_expression(o.alpha), parse_expression(o.beta), init_array<4>(o.init, o.system)}, n);
  }
  if (o.system == "somos5") {
    return somos5_seq({parse_expression(o.alpha_t), parse_expression(o.beta_t), init_array<5>(o.init, o.system)}, n);
  }
  return a1q_seq({parse_expression(o.beta), init_array<2>(o.init, o.system), std::nullopt}, n);
}

int cmd_gen(const Options& o, std::ostream& out) {
  auto terms = generate(o, o.n.value_or(10));
  if (o.format == "json") {
    out << render_terms_json(o.system, terms);
  } else if (o.format == "csv") {
    out << render_terms_csv(terms);
  } else {
    out << render_terms_text(terms);
  }
  return kPass;
}

int cmd_invariant(const Options& o, std::ostream& out) {
  const std::size_t shifts = o.n.value_or(5);
  if (shifts == 0) throw ParseError("--n must be at least 1 for invariant");
  std::vector<InvariantValue> values;
  std::string name;
  if (o.system == "somos4") {
    auto s = generate(o, shifts + 2);
    values = invariant_T_run(s, parse_expression(o.alpha), parse_expression(o.beta), shifts);
    name = "T";
  } else if (o.system == "somos5") {
    auto s = generate(o, shifts + 3);
    values = invariant_Ttilde_run(s, parse_expression(o.alpha_t), parse_expression(o.beta_t), shifts);
    name = "Ttilde";
  } else {
    throw ParseError("invariant supports somos4 and somos5");
  }
  bool constant = std::all_of(values.begin(), values.end(), [&](const auto& v) { return v.value == values[0].value; });
  if (o.format == "json") {
    VerdictReport r;
    r.suite = "invariant";
    for (const auto& v : values) r.pass(index_key(name + " shift", static_cast<long>(v.start)), v.value.to_string());
    if (constant) {
      r.pass("constant");
    } else {
      r.fail("constant", name + " changes across shifts");
    }
    out << render_report_json(r, {{"command", "invariant"}, {"system", o.system}, {"init", o.init},
                                  {"n", std::to_string(shifts)}});
  } else {
    for (const auto& v : values) {
      auto lp = v.value.as_laurent();
      out << name << "[" << v.start << "] = " << (lp ? lp->to_string() : v.value.to_string()) << "\n";
    }
    out << (constant ? "constant across " + std::to_string(shifts) + " shifts\n" : "NOT constant\n");
  }
  return constant ? kPass : kFail;
}

Symbols suite_symbols(const Options& o, const CLI::App& verify) {
  Symbols s = Symbols::symbolic();
  for (const auto& b : o.bindings) s.bind(b);
  if (verify.count("--alpha")) {
    auto root = monomial_sqrt(parse_expression(o.alpha));
    if (!root) throw ParseError("alpha must be a monomial perfect square, got '" + o.alpha + "'");
    s.sqrt_alpha = *root;
  }
  if (verify.count("--beta")) s.beta = parse_expression(o.beta);
  if (verify.count("--alphat")) s.alpha_t = parse_expression(o.alpha_t);
  if (verify.count("--betat")) s.beta_t = parse_expression(o.beta_t);
  return s;
}

int cmd_verify(const Options& o, const CLI::App& verify, std::ostream& out) {
  if (o.suite != "all" && !find_suite(o.suite)) throw ParseError("unknown suite '" + o.suite + "'");
  if (o.format == "csv") throw ParseError("csv output is only available for numeric gen");
  SuiteContext ctx;
  ctx.sym = suite_symbols(o, verify);
  ctx.depth = o.n;
  ctx.seed = o.seed;
  VerdictReport r = run_suite(o.suite, ctx, {o.jobs, o.timings});
  if (o.format == "json") {
    ConfigEcho cfg = {{"command", "verify"}, {"suite", o.suite}, {"n", o.n ? std::to_string(*o.n) : "default"},
                      {"seed", std::to_string(o.seed)}};
    for (const char* flag : {"--alpha", "--beta", "--alphat", "--betat"}) {
      if (!verify.count(flag)) continue;
      std::string key = std::string(flag).substr(2);
      cfg.emplace_back(key, key == "alpha" ? o.alpha : key == "beta" ? o.beta : key == "alphat" ? o.alpha_t : o.beta_t);
    }
    for (const auto& b : o.bindings) cfg.emplace_back("bind", b);
    out << render_report_json(r, cfg);
  } else {
    out << render_report_text(r);
  }
  return r.passed() ? kPass : kFail;
}

void add_params(CLI::App* sub, Options& o) {
  sub->add_option("--alpha", o.alpha, "Somos-4 alpha (a perfect square for verify)");
  sub->add_option("--beta", o.beta, "Somos-4 / A1 Q-system beta");
  sub->add_option("--alphat", o.alpha_t, "Somos-5 alpha");
  sub->add_option("--betat", o.beta_t, "Somos-5 beta");
  sub->add_option("--n", o.n, "Depth");
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
}

void add_system(CLI::App* sub, Options& o, std::vector<std::string> systems) {
  sub->add_option("--system", o.system, "Recurrence")->check(CLI::IsMember(std::move(systems)));
  sub->add_option("--init", o.init, "Comma-separated initial values")->required();
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Somos sequences as Hankel determinants: generation and verification"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "Generate S_0..S_N");
  add_system(gen, o, {"somos4", "somos5", "a1q"});
  add_params(gen, o);

  auto* inv = app.add_subcommand("invariant", "Conserved quantity at successive shifts");
  add_system(inv, o, {"somos4", "somos5"});
  add_params(inv, o);

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", o.suite, "Suite name or 'all'")->required();
  verify->add_option("--bind", o.bindings, "Override x, y, z or w: name=expr");
  verify->add_option("--seed", o.seed, "Seed for probabilistic checks");
  verify->add_option("--jobs", o.jobs, "Worker threads")->envname("SOMOS_JOBS")->check(CLI::PositiveNumber);
  verify->add_flag("--timings", o.timings, "Record wall-clock per item");
  add_params(verify, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*gen) return cmd_gen(o, out);
    if (*inv) return cmd_invariant(o, out);
    return cmd_verify(o, *verify, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UnknownVariable& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const SequenceError& e) {
    err << "domain error at S_" << e.index() << ": " << e.what() << "\n";
    return kDomain;
  } catch (const NotDivisible& e) {
    err << "domain error: " << e.what() << "\n";
    return kDomain;
  } catch (const Error& e) {
    err << "domain error: " << e.what() << "\n";
    return kDomain;
  } catch (const std::domain_error& e) {
    err << "domain error: " << e.what() << "\n";
    return kDomain;
  }
}

}  // namespace somos::cli
