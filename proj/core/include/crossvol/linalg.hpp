#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "crossvol/matrix.hpp"

namespace crossvol {

/// Largest absolute entry. Equals the operator norm from l1 to l-infinity.
double max_norm(const Matrix& a);

/// Default column cap for the exhaustive infinity-to-one norm.
inline constexpr std::size_t kInfToOneColumnCap = 25;

/// Operator norm from l-infinity to l1, max over x in {-1,+1}^n of |Bx|_1.
///
/// Exact: the maximum of a convex function over the unit cube is attained at
/// a vertex, so all 2^(n-1) sign vectors (up to a global sign) are visited.
/// Throws CapabilityError when cols() exceeds `column_cap`.
double inf_to_one_norm(const Matrix& b, std::size_t column_cap = kInfToOneColumnCap);

/// Singular values in nonincreasing order (one-sided Jacobi SVD).
std::vector<double> singular_values(const Matrix& a);

/// Largest singular value.
double spectral_norm(const Matrix& a);

/// Eigenvalues of the symmetric part (A + A^T)/2, ascending.
std::vector<double> symmetric_eigenvalues(const Matrix& a);

/// LU factorization with partial pivoting, PA = LU, L unit lower triangular.
struct LuFactors {
  Matrix lu;                          // L below the diagonal, U on and above
  std::vector<std::size_t> perm;      // row i of PA is row perm[i] of A
  int sign = 1;                       // determinant of P
  std::optional<std::size_t> zero_pivot;  // first exactly-zero pivot, if any
};

LuFactors lu_partial_pivot(const Matrix& a);

/// Determinant through partial-pivoting LU. Square input required.
double determinant(const Matrix& a);

/// Solves A X = B. Throws NumericalError naming the zero pivot when A is singular.
Matrix solve(const Matrix& a, const Matrix& b);

Matrix inverse(const Matrix& a);

/// Inverse of a triangular matrix by substitution; `lower` selects the shape.
Matrix triangular_inverse(const Matrix& t, bool lower);

}  // namespace crossvol
