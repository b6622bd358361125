#include "somos_cli/params.hpp"

#include <somos/errors.hpp>
#include <somos/text_io.hpp>

namespace somos::cli {

LaurentPoly parse_expression(std::string_view text) { return parse_laurent(text, VarTable::standard()); }

std::vector<LaurentPoly> parse_list(std::string_view text) {
  std::vector<LaurentPoly> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = text.substr(start, comma - start);
    if (item.find_first_not_of(" \t") == std::string_view::npos) throw ParseError("empty item in list '" + std::string(text) + "'");
    out.push_back(parse_expression(item));
    start = comma + 1;
  }
  return out;
}

std::optional<LaurentPoly> monomial_sqrt(const LaurentPoly& p) {
  if (!p.is_monomial()) return std::nullopt;
  const auto& t = p.leading();
  Rational root;
  if (!rational_sqrt(t.coeff, root)) return std::nullopt;
  Monomial half;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (t.mono.e[i] % 2 != 0) return std::nullopt;
    half.e[i] = static_cast<std::int16_t>(t.mono.e[i] / 2);
  }
  return LaurentPoly::monomial(half, root, p.vars());
}

Symbols Symbols::symbolic() {
  auto v = [](const char* n) { return LaurentPoly::variable(n); };
  return {v("x"), v("y"), v("z"), v("w"), v("r"), v("b"), v("a"), v("b")};
}

void Symbols::bind(std::string_view assignment) {
  auto eq = assignment.find('=');
  if (eq == std::string_view::npos) throw ParseError("binding must look like name=expr: '" + std::string(assignment) + "'");
  std::string_view name = assignment.substr(0, eq);
  LaurentPoly value = parse_expression(assignment.substr(eq + 1));
  if (name == "x") {
    x = std::move(value);
  } else if (name == "y") {
    y = std::move(value);
  } else if (name == "z") {
    z = std::move(value);
  } else if (name == "w") {
    w = std::move(value);
  } else {
    throw ParseError("only x, y, z, w can be bound; use --alpha/--beta/--alphat/--betat for parameters");
  }
}

}  // namespace somos::cli
