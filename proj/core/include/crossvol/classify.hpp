#pragma once

#include "crossvol/matrix.hpp"

namespace crossvol {

struct MatrixClass {
  bool is_symmetric = false;
  bool is_spsd = false;
  bool is_dd = false;
  bool is_strictly_dd = false;
  bool is_doubly_dd = false;

  friend bool operator==(const MatrixClass&, const MatrixClass&) = default;
};

inline constexpr double kDefaultClassifyTol = 1e-12;

/// Detects the matrix classes the error bounds depend on.
///
/// `rel_tol` is relative to max_norm(A): with t = rel_tol * |A|_max,
///  - row i is dominant when sum_{j != i} |a_ij| <= |a_ii| + t,
///    strictly dominant when |a_ii| - sum_{j != i} |a_ij| > t;
///  - A is symmetric when |a_ij - a_ji| <= t for all i, j;
///  - A is SPSD when symmetric and its smallest eigenvalue is >= -t.
/// Throws DimensionError for non-square input.
MatrixClass classify(const Matrix& a, double rel_tol = kDefaultClassifyTol);

}  // namespace crossvol
