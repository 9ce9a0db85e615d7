#include "cgeo/linalg.hpp"

#include "cgeo/errors.hpp"

namespace cgeo {

ScalarMat identity_matrix(const ChartPtr& chart, std::size_t n) {
  ScalarMat m(n, ScalarVec(n, Scalar::zero(chart)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = Scalar::constant(chart, Rat(1));
  return m;
}

namespace {

// Row-reduces [a | rhs] in place. Returns the permutation sign and throws on
// a singular matrix when require_full_rank is set.
int eliminate(ScalarMat& a, ScalarMat* rhs, bool require_full_rank) {
  std::size_t n = a.size();
  int sign = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    if (pivot == n) {
      if (require_full_rank) throw DomainError("singular matrix in exact solve");
      sign = 0;
      continue;
    }
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      if (rhs) std::swap((*rhs)[pivot], (*rhs)[col]);
      sign = -sign;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col].is_zero()) continue;
      Scalar f = a[row][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[row][k] = a[row][k] - f * a[col][k];
      if (rhs)
        for (std::size_t k = 0; k < (*rhs)[row].size(); ++k)
          (*rhs)[row][k] = (*rhs)[row][k] - f * (*rhs)[col][k];
    }
  }
  return sign;
}

} // namespace

Scalar determinant(const ScalarMat& a) {
  if (a.empty()) throw DomainError("determinant of empty matrix");
  ScalarMat m = a;
  const ChartPtr& chart = a[0][0].chart();
  int sign = eliminate(m, nullptr, false);
  if (sign == 0) return Scalar::zero(chart);
  Scalar det = Scalar::constant(chart, Rat(sign));
  for (std::size_t i = 0; i < m.size(); ++i) det = det * m[i][i];
  return det;
}

ScalarMat invert(const ScalarMat& a) {
  std::size_t n = a.size();
  const ChartPtr& chart = a[0][0].chart();
  ScalarMat m = a;
  ScalarMat inv = identity_matrix(chart, n);
  eliminate(m, &inv, true);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) inv[i][k] = inv[i][k] / m[i][i];
  return inv;
}

ScalarVec solve(const ScalarMat& a, const ScalarVec& b) {
  std::size_t n = a.size();
  ScalarMat m = a;
  ScalarMat rhs(n);
  for (std::size_t i = 0; i < n; ++i) rhs[i] = {b[i]};
  eliminate(m, &rhs, true);
  ScalarVec x(n, Scalar::zero(a[0][0].chart()));
  for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i][0] / m[i][i];
  return x;
}

ScalarVec mat_vec(const ScalarMat& a, const ScalarVec& v) {
  ScalarVec r(a.size(), Scalar::zero(v[0].chart()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) r[i] = r[i] + a[i][j] * v[j];
  return r;
}

ScalarMat mat_mul(const ScalarMat& a, const ScalarMat& b) {
  std::size_t n = a.size(), m = b[0].size(), k = b.size();
  ScalarMat r(n, ScalarVec(m, Scalar::zero(a[0][0].chart())));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t l = 0; l < k; ++l) r[i][j] = r[i][j] + a[i][l] * b[l][j];
  return r;
}

std::size_t symbolic_rank(ScalarMat a) {
  if (a.empty()) return 0;
  std::size_t rows = a.size(), cols = a[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t row = 0; row < rows; ++row) {
      if (row == rank || a[row][col].is_zero()) continue;
      Scalar f = a[row][col] / a[rank][col];
      for (std::size_t k = col; k < cols; ++k) a[row][k] = a[row][k] - f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

} // namespace cgeo
