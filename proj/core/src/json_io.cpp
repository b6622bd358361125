#include "somos/json_io.hpp"

#include "somos/errors.hpp"

#include <json.hpp>

namespace somos {

namespace {

using nlohmann::json;

template <class C>
std::string to_json_impl(const BasicLaurentPoly<C>& p) {
  json doc;
  doc["vars"] = p.vars().names();
  json terms = json::array();
  for (const auto& t : p.terms()) {
    std::vector<int> e(t.mono.e.begin(), t.mono.e.begin() + static_cast<std::ptrdiff_t>(p.vars().size()));
    terms.push_back({{"e", e}, {"c", to_string(t.coeff)}});
  }
  doc["terms"] = std::move(terms);
  return doc.dump();
}

VarTable table_for(const std::vector<std::string>& names) {
  if (names == VarTable::standard().names()) return VarTable::standard();
  if (names == VarTable::with_root().names()) return VarTable::with_root();
  return VarTable(names);
}

template <class C, class ParseCoeff>
BasicLaurentPoly<C> from_json_impl(std::string_view text, ParseCoeff parse_coeff) {
  using Poly = BasicLaurentPoly<C>;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid polynomial JSON: ") + e.what());
  }
  try {
    VarTable vars = table_for(doc.at("vars").get<std::vector<std::string>>());
    std::vector<typename Poly::Term> terms;
    for (const auto& t : doc.at("terms")) {
      auto e = t.at("e").get<std::vector<int>>();
      if (e.size() != vars.size()) throw ParseError("exponent vector length does not match vars");
      Monomial m;
      for (std::size_t i = 0; i < e.size(); ++i) m.e[i] = static_cast<std::int16_t>(e[i]);
      terms.push_back({m, parse_coeff(t.at("c").get<std::string>())});
    }
    return Poly::from_terms(std::move(terms), vars);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid polynomial JSON: ") + e.what());
  }
}

}  // namespace

std::string to_json(const LaurentPoly& p) { return to_json_impl(p); }
std::string to_json(const GaussianPoly& p) { return to_json_impl(p); }

LaurentPoly laurent_from_json(std::string_view text) {
  return from_json_impl<Rational>(text, [](const std::string& s) { return parse_rational(s); });
}

GaussianPoly gaussian_from_json(std::string_view text) {
  return from_json_impl<GaussianRational>(text, [](const std::string& s) { return parse_gaussian(s); });
}

}  // namespace somos
