#pragma once

#include <somos/laurent_poly.hpp>
#include <somos/verdict.hpp>

#include <string>
#include <utility>
#include <vector>

namespace somos::cli {

/// Ordered key/value pairs echoed into a report's "config" object.
using ConfigEcho = std::vector<std::pair<std::string, std::string>>;

std::string render_report_json(const VerdictReport& r, const ConfigEcho& config);
std::string render_report_text(const VerdictReport& r);

/// {"system": ..., "terms": [<polynomial exchange objects>]}
std::string render_terms_json(std::string_view system, const std::vector<LaurentPoly>& terms);
/// One line of comma-separated values; throws ParseError for a non-constant term.
std::string render_terms_csv(const std::vector<LaurentPoly>& terms);
std::string render_terms_text(const std::vector<LaurentPoly>& terms);

/// Inverse of render_terms_json.
std::vector<LaurentPoly> parse_terms_json(std::string_view text);

}  // namespace somos::cli
