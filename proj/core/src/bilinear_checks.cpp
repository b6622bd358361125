#include "somos/bilinear_checks.hpp"

namespace somos {

namespace {

void record(VerdictReport& r, const char* label, std::size_t n, const LaurentPoly& residual) {
  std::string key = index_key(label, static_cast<long>(n));
  if (residual.is_zero()) {
    r.pass(std::move(key));
  } else {
    r.fail(std::move(key), "residual " + residual.to_string());
  }
}

}  // namespace

VerdictReport check_bt_pair(const std::vector<LaurentPoly>& f, const std::vector<LaurentPoly>& g, const BTParams& bt,
                            const LaurentPoly& alpha) {
  VerdictReport r;
  for (std::size_t n = 1; n + 1 < f.size() && n + 1 < g.size(); ++n)
    record(r, "first n", n, g[n + 1] * f[n - 1] - bt.lambda * f[n + 1] * g[n - 1] - bt.mu * g[n] * f[n]);
  for (std::size_t n = 1; n + 2 < f.size() && n + 1 < g.size(); ++n)
    record(r, "second n", n, bt.mu * f[n + 2] * g[n - 1] - bt.eta * g[n + 1] * f[n] - alpha * f[n + 1] * g[n]);
  return r;
}

VerdictReport even_elimination_check(const std::vector<LaurentPoly>& f, const LaurentPoly& A, const LaurentPoly& B) {
  VerdictReport r;
  LaurentPoly A2 = A * A;
  LaurentPoly B2 = B * B;
  for (std::size_t m = 4; m < f.size(); ++m) {
    LaurentPoly left = (f[m - 3] * f[m] - A2 * f[m - 2] * f[m - 1]) * (f[m - 4] * f[m - 1] - A2 * f[m - 3] * f[m - 2]);
    LaurentPoly mid = f[m - 3] * f[m - 1] + A * f[m - 2] * f[m - 2];
    record(r, "m", m, left - B2 * mid * mid);
  }
  return r;
}

}  // namespace somos
