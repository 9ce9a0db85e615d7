#ifndef CGEO_LINALG_HPP
#define CGEO_LINALG_HPP

#include <vector>

#include "cgeo/scalar.hpp"

namespace cgeo {

using ScalarVec = std::vector<Scalar>;
using ScalarMat = std::vector<std::vector<Scalar>>;

ScalarMat identity_matrix(const ChartPtr& chart, std::size_t n);

/// Exact determinant by fraction-ful Gaussian elimination with symbolic
/// nonzero pivoting.
Scalar determinant(const ScalarMat& a);

/// Exact inverse; throws DomainError when the matrix is singular as a matrix
/// over the rational-function field.
ScalarMat invert(const ScalarMat& a);

/// Solves a x = b exactly; throws DomainError on singular a.
ScalarVec solve(const ScalarMat& a, const ScalarVec& b);

ScalarVec mat_vec(const ScalarMat& a, const ScalarVec& v);
ScalarMat mat_mul(const ScalarMat& a, const ScalarMat& b);

/// Generic symbolic rank over the function field (row reduction).
std::size_t symbolic_rank(ScalarMat a);

} // namespace cgeo

#endif
