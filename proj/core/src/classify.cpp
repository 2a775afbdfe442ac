#include "crossvol/classify.hpp"

#include <cmath>

#include "crossvol/errors.hpp"
#include "crossvol/linalg.hpp"

namespace crossvol {

namespace {

struct Dominance {
  bool dd = true;
  bool strict = true;
};

// Row dominance of A, or of A^T when `by_columns` is set.
Dominance dominance(const Matrix& a, double tol, bool by_columns) {
  const std::size_t n = a.rows();
  Dominance d;
  for (std::size_t i = 0; i < n; ++i) {
    double off = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) off += std::abs(by_columns ? a(j, i) : a(i, j));
    }
    const double diag = std::abs(a(i, i));
    if (off > diag + tol) d.dd = false;
    if (!(diag - off > tol)) d.strict = false;
  }
  d.strict = d.strict && d.dd;
  return d;
}

}  // namespace

MatrixClass classify(const Matrix& a, double rel_tol) {
  if (!a.is_square()) throw DimensionError("classify: matrix is not square");
  if (a.empty()) throw DimensionError("classify: empty matrix");
  const std::size_t n = a.rows();
  const double tol = rel_tol * max_norm(a);

  MatrixClass cls;
  cls.is_symmetric = true;
  for (std::size_t i = 0; i < n && cls.is_symmetric; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(a(i, j) - a(j, i)) > tol) {
        cls.is_symmetric = false;
        break;
      }
    }
  }
  if (cls.is_symmetric) {
    cls.is_spsd = symmetric_eigenvalues(a).front() >= -tol;
  }

  const Dominance rows = dominance(a, tol, false);
  const Dominance cols = dominance(a, tol, true);
  cls.is_dd = rows.dd;
  cls.is_strictly_dd = rows.strict;
  cls.is_doubly_dd = rows.dd && cols.dd;
  return cls;
}

}  // namespace crossvol
