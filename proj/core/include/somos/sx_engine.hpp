#pragma once

#include "somos/laurent_poly.hpp"
#include "somos/rat_func.hpp"
#include "somos/recurrences.hpp"
#include "somos/series.hpp"
#include "somos/verdict.hpp"

#include <cstddef>
#include <vector>

namespace somos {

/// One state of the quadratic-transformation recursion. Beyond the initial
/// state the components are rational functions in general.
struct SXState {
  RatFunc a, b, c, d, e, f;

  static SXState from(const FunctionalEquationData& fe);
  friend bool operator==(const SXState&, const SXState&) = default;
};

/// Next state. Throws ZeroPivot when a is zero.
SXState sx_step(const SXState& s);

class SXTrajectory {
 public:
  /// s0 followed by `steps` successors.
  static SXTrajectory run(SXState s0, std::size_t steps);

  std::size_t size() const noexcept { return states_.size(); }
  const SXState& operator[](std::size_t i) const { return states_.at(i); }
  const std::vector<SXState>& states() const noexcept { return states_; }

 private:
  std::vector<SXState> states_;
};

/// a_0^n a_1^{n-1} ... a_{n-1}; needs n states.
RatFunc sx_hankel_product(const SXTrajectory& t, std::size_t n);

/// c constant and e = -1 from index 1 on.
VerdictReport sx_structure_check(const SXTrajectory& t);

/// a_{n+2}a_{n+1} + a_{n+1}a_n = 2a_0a_1 + a_0(2f_1 + c)(f_0 + c + f_1) - a_0^2(f_0 + c + f_1)^2 / a_{n+1}
/// for 0 <= n <= up_to; needs up_to + 3 states.
VerdictReport sx_closed_identity_check(const SXTrajectory& t, std::size_t up_to);

/// On a trajectory started from somos4_initials with S_1 = x, S_2 = y
/// (p.init = 1, 1, x, y):
///   a_n a_{n-1} a_{n-2} = alpha + beta / a_{n-1},            2 <= n < size
///   a_{n+2} = K/a_{n+1} - alpha/a_{n+1}^2 - a_n,                n + 2 < size
///   T(n) = K a_{n-1}a_{n-2} - alpha a_{n-2} - a_{n-1}^2 a_{n-2}^2 - alpha a_{n-1} - beta = 0
/// with K = (beta x^2 + y^2 + alpha x^3 + alpha y)/(xy).
VerdictReport sx_a_recursion_check(const SXTrajectory& t, const SomosParams& p);

/// H_n(F) = x^n H_{n-1}(G) and T_n T_{n-2} - T_{n-1}^2 - beta x^{-2n} = 0 with
/// T_n = H_n(G), for n <= n_max; F, G the A1 Q-system series.
VerdictReport sx_shift_transform_check(const LaurentPoly& x, const LaurentPoly& beta, std::size_t n_max);

}  // namespace somos
