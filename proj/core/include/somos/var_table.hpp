#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace somos {

inline constexpr std::size_t kMaxVars = 8;

/// Immutable ordered list of variable symbols shared by value.
///
/// The standard table is `r < x < y < z < w < b < a`: r is the formal square
/// root of alpha (alpha = r^2), x..w are initial-value indeterminates, b
/// carries beta (or beta-tilde) and a carries alpha-tilde. The root table
/// appends `s`, a second formal square root (s^2 = xyz).
class VarTable {
 public:
  /// Standard table; the default for every polynomial.
  VarTable();
  explicit VarTable(std::vector<std::string> names);

  static const VarTable& standard();
  static const VarTable& with_root();

  std::size_t size() const noexcept { return names_->size(); }
  const std::vector<std::string>& names() const noexcept { return *names_; }
  const std::string& name(std::size_t i) const { return (*names_)[i]; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  /// Index of `name`; throws UnknownVariable.
  std::size_t require(std::string_view name) const;

  /// True when every symbol here appears at the same position in `other`.
  bool is_prefix_of(const VarTable& other) const;

  friend bool operator==(const VarTable& a, const VarTable& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

}  // namespace somos
