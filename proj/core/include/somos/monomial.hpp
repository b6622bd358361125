#pragma once

#include "somos/var_table.hpp"

#include <array>
#include <cstdint>
#include <functional>

namespace somos {

/// Exponent vector of a Laurent monomial. Slots beyond the table size stay 0.
struct Monomial {
  std::array<std::int16_t, kMaxVars> e{};

  int degree() const noexcept {
    int d = 0;
    for (auto x : e) d += x;
    return d;
  }

  bool is_one() const noexcept {
    for (auto x : e)
      if (x != 0) return false;
    return true;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial operator/(const Monomial& a, const Monomial& b);

  /// Componentwise minimum.
  static Monomial min(const Monomial& a, const Monomial& b) noexcept {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) m.e[i] = a.e[i] < b.e[i] ? a.e[i] : b.e[i];
    return m;
  }

  /// a >= b componentwise.
  static bool dominates(const Monomial& a, const Monomial& b) noexcept {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (a.e[i] < b.e[i]) return false;
    return true;
  }

  Monomial pow(long k) const;
};

/// Graded lexicographic comparison: total degree first, then exponents in
/// table order (r first). Returns <0, 0, >0.
inline int grlex_compare(const Monomial& a, const Monomial& b) noexcept {
  int da = a.degree();
  int db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
  return 0;
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto x : m.e) {
      h ^= static_cast<std::uint16_t>(x);
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace somos
