#pragma once

#include <cassert>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "circfol/bigint.hpp"
#include "circfol/errors.hpp"

namespace circfol {

/// Dense row-major matrix over an arbitrary scalar (big integers,
/// polynomials, ...). Storage only; algorithms are free functions.
template <class Scalar>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, const Scalar& fill = Scalar())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
  }
  const Scalar& operator()(std::size_t r, std::size_t c) const {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  /// Copy with row `skip_row` and column `skip_col` removed.
  DenseMatrix minor(std::size_t skip_row, std::size_t skip_col) const {
    DenseMatrix out(rows_ - 1, cols_ - 1);
    for (std::size_t r = 0, rr = 0; r < rows_; ++r) {
      if (r == skip_row) continue;
      for (std::size_t c = 0, cc = 0; c < cols_; ++c) {
        if (c == skip_col) continue;
        out(rr, cc++) = (*this)(r, c);
      }
      ++rr;
    }
    return out;
  }

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

using IntMatrix = DenseMatrix<BigInt>;

// Ring hooks for Bareiss elimination. Other scalar types (polynomials)
// provide their own overloads found by ADL.
inline bool is_zero(const BigInt& v) { return sgn(v) == 0; }

inline BigInt exact_div(const BigInt& num, const BigInt& den) {
  if (mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()) == 0)
    throw InternalError("fraction-free elimination hit a non-exact division");
  BigInt q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

/// Determinant over an integral domain by Bareiss fraction-free elimination.
/// Every intermediate division is exact; pivoting takes the first nonzero
/// entry in the column and tracks the sign of each row swap.
template <class Scalar>
Scalar det_bareiss(DenseMatrix<Scalar> a, const Scalar& one = Scalar(1)) {
  if (!a.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return one;

  bool negate = false;
  Scalar prev = one;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && is_zero(a(pivot, k))) ++pivot;
    if (pivot == n) return Scalar{};
    if (pivot != k) {
      a.swap_rows(pivot, k);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Scalar t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        a(i, j) = exact_div(t, prev);
      }
      a(i, k) = Scalar{};
    }
    prev = a(k, k);
  }
  Scalar det = a(n - 1, n - 1);
  if (negate) det = Scalar{} - det;
  return det;
}

}  // namespace circfol
