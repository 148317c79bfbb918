// Small dense exact linear algebra over the scalar field: rank, kernel,
// image, span membership.  Everything is Gaussian elimination with exact
// division; sizes here are tiny (<= a few hundred rows).

#pragma once

#include <vector>

#include "qweil/scalar.hpp"

namespace qweil {

using ScalarVec = std::vector<Scalar>;
using ScalarMat = std::vector<ScalarVec>;  // row-major

inline int rank_destructive(ScalarMat& rows) {
  if (rows.empty()) return 0;
  size_t cols = rows[0].size();
  int rank = 0;
  for (size_t col = 0; col < cols && rank < static_cast<int>(rows.size()); ++col) {
    size_t pivot = SIZE_MAX;
    for (size_t r = rank; r < rows.size(); ++r)
      if (!rows[r][col].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot == SIZE_MAX) continue;
    std::swap(rows[rank], rows[pivot]);
    const ScalarVec& prow = rows[rank];
    for (size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col].is_zero()) continue;
      Scalar f = rows[r][col] / prow[col];
      for (size_t c = col; c < cols; ++c)
        if (!prow[c].is_zero()) rows[r][c] -= f * prow[c];
    }
    ++rank;
  }
  return rank;
}

inline int rank_of(ScalarMat rows) { return rank_destructive(rows); }

// Basis of the kernel of the matrix acting on column vectors.
inline ScalarMat kernel_basis(const ScalarMat& mat, size_t cols) {
  // reduce to row echelon form, track pivot columns
  ScalarMat rows = mat;
  std::vector<size_t> pivot_col;
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows.size(); ++col) {
    size_t pivot = SIZE_MAX;
    for (size_t r = rank; r < rows.size(); ++r)
      if (!rows[r][col].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot == SIZE_MAX) continue;
    std::swap(rows[rank], rows[pivot]);
    Scalar inv = Scalar::one() / rows[rank][col];
    for (size_t c = col; c < cols; ++c)
      if (!rows[rank][c].is_zero()) rows[rank][c] = rows[rank][c] * inv;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      Scalar f = rows[r][col];
      for (size_t c = col; c < cols; ++c)
        if (!rows[rank][c].is_zero()) rows[r][c] -= f * rows[rank][c];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<bool> is_pivot(cols, false);
  for (size_t c : pivot_col) is_pivot[c] = true;
  ScalarMat basis;
  for (size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    ScalarVec v(cols);
    v[free] = Scalar::one();
    for (size_t r = 0; r < pivot_col.size(); ++r)
      v[pivot_col[r]] = -rows[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Is x in the row span of rows?
inline bool in_span(const ScalarMat& rows, const ScalarVec& x) {
  ScalarMat m = rows;
  m.push_back(x);
  return rank_of(rows) == rank_destructive(m);
}

}  // namespace qweil
