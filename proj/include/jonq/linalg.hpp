#pragma once

#include <cstddef>
#include <vector>

#include "jonq/rational.hpp"
#include "jonq/ratfunc.hpp"

namespace jonq {

/// Dense matrix over a field, stored as a vector of rows.
template <typename Scalar>
using DenseMatrix = std::vector<std::vector<Scalar>>;

/// In-place reduced row echelon form; returns the pivot columns. Zero rows
/// are removed, so afterwards rows.size() == rank.
std::vector<std::size_t> reduce_row_echelon(DenseMatrix<Rational>& rows, std::size_t cols);

/// Basis of {v : A v = 0} over the rationals, one vector per free column.
DenseMatrix<Rational> nullspace(DenseMatrix<Rational> a, std::size_t cols);

/// Rank over the rational function field Q(x, params). Exact: a full-rank
/// numeric specialization certifies full rank, otherwise symbolic elimination.
std::size_t rank(const DenseMatrix<RatFunc>& m);

}  // namespace jonq
