#pragma once

#include "somos/coeff_seq.hpp"
#include "somos/laurent_poly.hpp"

#include <cstddef>
#include <vector>

namespace somos {

template <class T>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  SquareMatrix(std::size_t n, const T& fill) : n_(n), data_(n * n, fill) {}

  std::size_t size() const noexcept { return n_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < n_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

 private:
  std::size_t n_ = 0;
  std::vector<T> data_;
};

using PolyMatrix = SquareMatrix<LaurentPoly>;

/// Entry (i, j) = terms[i + j + shift]; needs 2n - 1 + shift terms.
PolyMatrix hankel_matrix(const std::vector<LaurentPoly>& terms, std::size_t n, std::size_t shift = 0);
PolyMatrix hankel_matrix(const CoeffSeq& seq, std::size_t n, std::size_t shift = 0);

/// One-step fraction-free elimination with row pivoting. The 0x0 matrix has
/// determinant 1. A non-exact interior division throws InternalInconsistency.
/// `vars` is used only for the empty matrix.
template <class P>
P det_bareiss(SquareMatrix<P> m, const VarTable& vars = VarTable::standard());

/// Cofactor expansion; throws DimensionTooLarge above 6.
template <class P>
P det_laplace(const SquareMatrix<P>& m, const VarTable& vars = VarTable::standard());

/// H_n^{(l)} = det(p_{i+j+l}) for n = 0..n_max; H_0 = 1.
std::vector<LaurentPoly> shifted_hankel_run(const CoeffSeq& seq, std::size_t n_max, std::size_t shift);

}  // namespace somos
