#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace somos {

enum class Status { Pass, Fail, Skip };

std::string_view to_string(Status s) noexcept;

struct VerdictItem {
  std::string key;
  Status status = Status::Pass;
  std::optional<std::string> witness;
  std::int64_t ms = 0;
};

/// Outcome of one verification run; a failing item always has a witness.
struct VerdictReport {
  std::string suite;
  std::vector<VerdictItem> items;

  void pass(std::string key, std::optional<std::string> note = std::nullopt);
  void fail(std::string key, std::string witness);
  void skip(std::string key, std::string reason);
  /// Append `other`'s items with keys prefixed by `prefix/`.
  void absorb(const VerdictReport& other, std::string_view prefix);

  bool passed() const noexcept;
  const VerdictItem* first_failure() const noexcept;
};

/// Witness strings are capped so reports stay readable.
inline constexpr std::size_t kMaxWitnessLength = 4000;
std::string truncate_witness(std::string w);

/// Zero-padded key so lexicographic order matches numeric order.
std::string index_key(std::string_view label, long n);

}  // namespace somos
