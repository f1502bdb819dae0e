#include "jonq/linalg.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace jonq {

std::vector<std::size_t> reduce_row_echelon(DenseMatrix<Rational>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const Rational inv = 1 / rows[r][c];
    for (std::size_t k = c; k < cols; ++k) rows[r][k] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t k = c; k < cols; ++k)
        if (rows[r][k] != 0) rows[i][k] -= f * rows[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

DenseMatrix<Rational> nullspace(DenseMatrix<Rational> a, std::size_t cols) {
  const std::vector<std::size_t> pivots = reduce_row_echelon(a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  DenseMatrix<Rational> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(cols);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace {

std::size_t numeric_rank(const DenseMatrix<RatFunc>& m, std::mt19937_64& rng, bool& ok) {
  std::vector<Var> vars;
  for (const auto& row : m)
    for (const auto& e : row) {
      auto vs = e.variables();
      vars.insert(vars.end(), vs.begin(), vs.end());
    }
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  std::uniform_int_distribution<long> num(-97, 97);
  std::uniform_int_distribution<long> den(1, 9);
  std::map<Var, Rational> point;
  for (Var v : vars) {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    point[v] = q;
  }
  DenseMatrix<Rational> values;
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  for (const auto& row : m) {
    std::vector<Rational> vr;
    for (const auto& e : row) {
      auto val = evaluate(e, point);
      if (!val) {
        ok = false;
        return 0;
      }
      vr.push_back(*val);
    }
    values.push_back(std::move(vr));
  }
  ok = true;
  return reduce_row_echelon(values, cols).size();
}

}  // namespace

std::size_t rank(const DenseMatrix<RatFunc>& m) {
  if (m.empty() || m.front().empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  const std::size_t full = std::min(rows, cols);

  std::mt19937_64 rng(0x5eed);
  for (int attempt = 0; attempt < 4; ++attempt) {
    bool ok = false;
    if (numeric_rank(m, rng, ok) == full && ok) return full;
  }

  DenseMatrix<RatFunc> a = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[r], a[p]);
    const RatFunc inv = a[r][c].inverse();
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][c].is_zero()) continue;
      const RatFunc f = a[i][c] * inv;
      for (std::size_t k = c; k < cols; ++k)
        if (!a[r][k].is_zero()) a[i][k] -= f * a[r][k];
    }
    ++r;
  }
  return r;
}

}  // namespace jonq
