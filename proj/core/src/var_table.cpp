#include "somos/var_table.hpp"

#include "somos/errors.hpp"

#include <algorithm>

namespace somos {

namespace {

std::shared_ptr<const std::vector<std::string>> standard_names() {
  static const auto names = std::make_shared<const std::vector<std::string>>(
      std::vector<std::string>{"r", "x", "y", "z", "w", "b", "a"});
  return names;
}

}  // namespace

VarTable::VarTable() : names_(standard_names()) {}

VarTable::VarTable(std::vector<std::string> names) {
  if (names.size() > kMaxVars)
    throw Error("variable table holds at most " + std::to_string(kMaxVars) + " symbols");
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty()) throw Error("empty variable symbol");
    if (std::find(names.begin() + static_cast<std::ptrdiff_t>(i) + 1, names.end(), names[i]) !=
        names.end())
      throw Error("duplicate variable symbol '" + names[i] + "'");
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

const VarTable& VarTable::standard() {
  static const VarTable table;
  return table;
}

const VarTable& VarTable::with_root() {
  static const VarTable table(std::vector<std::string>{"r", "x", "y", "z", "w", "b", "a", "s"});
  return table;
}

std::optional<std::size_t> VarTable::index_of(std::string_view name) const {
  const auto& v = *names_;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] == name) return i;
  return std::nullopt;
}

std::size_t VarTable::require(std::string_view name) const {
  if (auto idx = index_of(name)) return *idx;
  throw UnknownVariable("unknown variable '" + std::string(name) + "'");
}

bool VarTable::is_prefix_of(const VarTable& other) const {
  if (size() > other.size()) return false;
  return std::equal(names_->begin(), names_->end(), other.names_->begin());
}

}  // namespace somos
