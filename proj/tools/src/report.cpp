#include "somos_cli/report.hpp"

#include <somos/errors.hpp>
#include <somos/json_io.hpp>

#include <json.hpp>

namespace somos::cli {

using json = nlohmann::ordered_json;

std::string render_report_json(const VerdictReport& r, const ConfigEcho& config) {
  json cfg = json::object();
  for (const auto& [k, v] : config) cfg[k] = v;
  json items = json::array();
  for (const auto& it : r.items) {
    items.push_back({{"key", it.key},
                     {"status", std::string(to_string(it.status))},
                     {"witness", it.witness ? json(*it.witness) : json(nullptr)},
                     {"ms", it.ms}});
  }
  json out = {{"suite", r.suite}, {"config", std::move(cfg)}, {"items", std::move(items)}};
  return out.dump(2) + "\n";
}

std::string render_report_text(const VerdictReport& r) {
  std::string out;
  std::size_t passed = 0, failed = 0, skipped = 0;
  for (const auto& it : r.items) {
    switch (it.status) {
      case Status::Pass:
        ++passed;
        out += "pass  " + it.key;
        if (it.witness) out += "  (" + *it.witness + ")";
        break;
      case Status::Fail:
        ++failed;
        out += "FAIL  " + it.key + "\n      " + it.witness.value_or("");
        break;
      case Status::Skip:
        ++skipped;
        out += "skip  " + it.key + "  " + it.witness.value_or("");
        break;
    }
    out += '\n';
  }
  out += r.suite + ": " + std::to_string(passed) + " passed, " + std::to_string(failed) + " failed, " +
         std::to_string(skipped) + " skipped\n";
  return out;
}

std::string render_terms_json(std::string_view system, const std::vector<LaurentPoly>& terms) {
  json arr = json::array();
  for (const auto& t : terms) arr.push_back(json::parse(to_json(t)));
  json out = {{"system", std::string(system)}, {"terms", std::move(arr)}};
  return out.dump() + "\n";
}

std::string render_terms_csv(const std::vector<LaurentPoly>& terms) {
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (!terms[i].is_constant()) {
      throw ParseError("csv output needs numeric terms; S_" + std::to_string(i) + " = " + terms[i].to_string());
    }
    if (i) out += ',';
    out += terms[i].to_string();
  }
  return out + "\n";
}

std::string render_terms_text(const std::vector<LaurentPoly>& terms) {
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) out += "S_" + std::to_string(i) + " = " + terms[i].to_string() + "\n";
  return out;
}

std::vector<LaurentPoly> parse_terms_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
  if (!doc.is_object() || !doc.contains("terms") || !doc["terms"].is_array()) throw ParseError("missing \"terms\" array");
  std::vector<LaurentPoly> out;
  for (const auto& t : doc["terms"]) out.push_back(laurent_from_json(t.dump()));
  return out;
}

}  // namespace somos::cli
