#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "jonq/rational.hpp"

namespace jonq {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t r);

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

using IntVector = std::vector<Integer>;

/// U·M·V = D with U, V unimodular and D diagonal, d_1 | d_2 | ..., d_j >= 0.
struct SmithForm {
  IntMatrix left;
  IntMatrix diagonal;
  IntMatrix right;
};

/// Classical elementary-operation algorithm, minimal-absolute-value pivoting.
SmithForm smith_normal_form(const IntMatrix& m);

/// Basis of the integer kernel lattice {v : M·v = 0}, in Hermite normal form
/// (row echelon, first nonzero entry positive, entries above pivots reduced).
std::vector<IntVector> kernel_basis(const IntMatrix& m);

/// Row Hermite normal form of the lattice spanned by `rows`; zero rows dropped.
std::vector<IntVector> hermite_normal_form(std::vector<IntVector> rows);

std::size_t rank(const IntMatrix& m);

/// Fraction-free (Bareiss) determinant of a square matrix.
Integer determinant(const IntMatrix& m);

IntVector multiply(const IntMatrix& m, const IntVector& v);

}  // namespace jonq
