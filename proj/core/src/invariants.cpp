#include "somos/invariants.hpp"

#include <stdexcept>

namespace somos {

InvariantValue invariant_T(std::span<const LaurentPoly> w, const LaurentPoly& alpha, const LaurentPoly& beta,
                           std::size_t start) {
  if (w.size() != 4) throw std::invalid_argument("invariant_T needs 4 consecutive terms");
  RatFunc s0(w[0]), s1(w[1]), s2(w[2]), s3(w[3]);
  RatFunc i0 = s0.inverse(), i1 = s1.inverse(), i2 = s2.inverse(), i3 = s3.inverse();
  RatFunc t = s0 * s3 * i1 * i2 + RatFunc(alpha) * (s1 * s1 * i0 * i2 + s2 * s2 * i1 * i3) +
              RatFunc(beta) * s1 * s2 * i0 * i3;
  return {std::move(t), start};
}

InvariantValue invariant_Ttilde(std::span<const LaurentPoly> w, const LaurentPoly& alpha_t, const LaurentPoly& beta_t,
                                std::size_t start) {
  if (w.size() != 5) throw std::invalid_argument("invariant_Ttilde needs 5 consecutive terms");
  RatFunc s0(w[0]), s1(w[1]), s2(w[2]), s3(w[3]), s4(w[4]);
  RatFunc i0 = s0.inverse(), i1 = s1.inverse(), i2 = s2.inverse(), i3 = s3.inverse(), i4 = s4.inverse();
  RatFunc t = s0 * s3 * i1 * i2 + s1 * s4 * i2 * i3 + RatFunc(alpha_t) * (s1 * s2 * i0 * i3 + s2 * s3 * i1 * i4) +
              RatFunc(beta_t) * s2 * s2 * i0 * i4;
  return {std::move(t), start};
}

namespace {

template <class F>
std::vector<InvariantValue> run(const std::vector<LaurentPoly>& s, std::size_t width, std::size_t shifts, F f) {
  if (s.size() < shifts + width - 1) throw std::invalid_argument("invariant run: sequence too short");
  std::vector<InvariantValue> out;
  for (std::size_t k = 0; k < shifts; ++k) out.push_back(f(std::span<const LaurentPoly>(s).subspan(k, width), k));
  return out;
}

}  // namespace

std::vector<InvariantValue> invariant_T_run(const std::vector<LaurentPoly>& s, const LaurentPoly& alpha,
                                            const LaurentPoly& beta, std::size_t shifts) {
  return run(s, 4, shifts, [&](std::span<const LaurentPoly> w, std::size_t k) { return invariant_T(w, alpha, beta, k); });
}

std::vector<InvariantValue> invariant_Ttilde_run(const std::vector<LaurentPoly>& s, const LaurentPoly& alpha_t,
                                                 const LaurentPoly& beta_t, std::size_t shifts) {
  return run(s, 5, shifts,
             [&](std::span<const LaurentPoly> w, std::size_t k) { return invariant_Ttilde(w, alpha_t, beta_t, k); });
}

}  // namespace somos
