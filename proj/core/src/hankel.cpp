#include "somos/hankel.hpp"

#include "somos/errors.hpp"

#include <string>

namespace somos {

PolyMatrix hankel_matrix(const std::vector<LaurentPoly>& terms, std::size_t n, std::size_t shift) {
  if (n == 0) return {};
  if (terms.size() < 2 * n - 1 + shift) throw std::out_of_range("hankel_matrix: not enough terms");
  PolyMatrix m(n, LaurentPoly(terms.front().vars()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = terms[i + j + shift];
  return m;
}

PolyMatrix hankel_matrix(const CoeffSeq& seq, std::size_t n, std::size_t shift) {
  if (n == 0) return {};
  return hankel_matrix(seq.prefix(2 * n - 1 + shift), n, shift);
}

template <class P>
P det_bareiss(SquareMatrix<P> m, const VarTable& vars) {
  using C = typename P::Coeff;
  const std::size_t n = m.size();
  if (n == 0) return P(C(1), vars);
  bool negate = false;
  P prev(C(1), m(0, 0).vars());
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m(p, k).is_zero()) ++p;
      if (p == n) return P(m(0, 0).vars());  // column k is identically zero below the diagonal
      m.swap_rows(k, p);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        P num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        auto q = try_exact_div(num, prev);
        if (!q) {
          throw InternalInconsistency("Bareiss division not exact at step " + std::to_string(k));
        }
        m(i, j) = std::move(*q);
      }
    }
    prev = m(k, k);
  }
  P d = m(n - 1, n - 1);
  return negate ? -d : d;
}

namespace {

template <class P>
P laplace_rec(const SquareMatrix<P>& m, std::vector<std::size_t>& cols, std::size_t row) {
  using C = typename P::Coeff;
  const std::size_t n = m.size();
  if (row == n) return P(C(1), m(0, 0).vars());
  std::vector<P> parts;
  std::size_t live = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (cols[c]) continue;
    const P& entry = m(row, c);
    if (!entry.is_zero()) {
      cols[c] = 1;
      P minor = laplace_rec(m, cols, row + 1);
      cols[c] = 0;
      P term = entry * minor;
      parts.push_back(live % 2 ? -term : term);
    }
    ++live;
  }
  return sum(parts, m(0, 0).vars());
}

}  // namespace

template <class P>
P det_laplace(const SquareMatrix<P>& m, const VarTable& vars) {
  using C = typename P::Coeff;
  if (m.size() > 6) throw DimensionTooLarge("det_laplace limited to n <= 6, got " + std::to_string(m.size()));
  if (m.size() == 0) return P(C(1), vars);
  std::vector<std::size_t> cols(m.size(), 0);
  return laplace_rec(m, cols, 0);
}

std::vector<LaurentPoly> shifted_hankel_run(const CoeffSeq& seq, std::size_t n_max, std::size_t shift) {
  std::vector<LaurentPoly> out;
  out.reserve(n_max + 1);
  out.emplace_back(Rational(1), seq.vars());
  for (std::size_t n = 1; n <= n_max; ++n) out.push_back(det_bareiss(hankel_matrix(seq, n, shift)));
  return out;
}

template LaurentPoly det_bareiss(PolyMatrix, const VarTable&);
template GaussianPoly det_bareiss(SquareMatrix<GaussianPoly>, const VarTable&);
template LaurentPoly det_laplace(const PolyMatrix&, const VarTable&);
template GaussianPoly det_laplace(const SquareMatrix<GaussianPoly>&, const VarTable&);

}  // namespace somos
