#include "crossvol/linalg.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <string>

#include "crossvol/errors.hpp"
#include "crossvol/parallel.hpp"

namespace crossvol {

namespace {

Eigen::MatrixXd to_eigen(const Matrix& a) {
  Eigen::MatrixXd m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  return m;
}

void require_nonempty(const Matrix& a, const char* what) {
  if (a.empty()) throw DimensionError(std::string(what) + ": empty matrix");
}

void require_square(const Matrix& a, const char* what) {
  if (!a.is_square()) throw DimensionError(std::string(what) + ": matrix is not square");
}

}  // namespace

double max_norm(const Matrix& a) {
  require_nonempty(a, "max_norm");
  double m = 0.0;
  for (double v : a.data()) m = std::max(m, std::abs(v));
  return m;
}

double inf_to_one_norm(const Matrix& b, std::size_t column_cap) {
  require_nonempty(b, "inf_to_one_norm");
  const std::size_t rows = b.rows();
  const std::size_t cols = b.cols();
  if (cols > column_cap) {
    throw CapabilityError("inf_to_one_norm enumerates 2^n sign vectors; n = " +
                          std::to_string(cols) + " exceeds the cap " +
                          std::to_string(column_cap));
  }
  if (cols > 63) throw CapabilityError("inf_to_one_norm: too many columns");

  // x and -x give the same |Bx|_1, so x_0 = +1 is fixed. The remaining
  // columns split into inner ones walked in Gray-code order (one column
  // update per vertex) and outer ones that fix a freshly computed base
  // vector, which bounds rounding drift along the walk.
  const std::size_t free_bits = cols - 1;
  const std::size_t inner_bits = std::min<std::size_t>(free_bits, 12);
  const std::size_t outer_bits = free_bits - inner_bits;
  const std::uint64_t outer_count = std::uint64_t{1} << outer_bits;
  const std::uint64_t inner_count = std::uint64_t{1} << inner_bits;

  std::vector<double> chunk_best(thread_count(), 0.0);
  parallel_chunks(outer_count, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
    std::vector<double> x(cols);
    std::vector<double> y(rows);
    double best = 0.0;
    for (std::uint64_t outer = begin; outer < end; ++outer) {
      x[0] = 1.0;
      for (std::size_t j = 1; j <= inner_bits; ++j) x[j] = 1.0;
      for (std::size_t t = 0; t < outer_bits; ++t) {
        x[1 + inner_bits + t] = ((outer >> t) & 1U) != 0 ? -1.0 : 1.0;
      }
      for (std::size_t i = 0; i < rows; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < cols; ++j) s += b(i, j) * x[j];
        y[i] = s;
      }
      auto l1 = [&] {
        double s = 0.0;
        for (double v : y) s += std::abs(v);
        return s;
      };
      best = std::max(best, l1());
      for (std::uint64_t g = 1; g < inner_count; ++g) {
        const std::size_t col = 1 + static_cast<std::size_t>(std::countr_zero(g));
        const double delta = -2.0 * x[col];
        x[col] = -x[col];
        for (std::size_t i = 0; i < rows; ++i) y[i] += delta * b(i, col);
        best = std::max(best, l1());
      }
    }
    chunk_best[chunk] = best;
  });
  return *std::max_element(chunk_best.begin(), chunk_best.end());
}

std::vector<double> singular_values(const Matrix& a) {
  require_nonempty(a, "singular_values");
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(to_eigen(a));
  const auto& s = svd.singularValues();
  std::vector<double> out(s.data(), s.data() + s.size());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

double spectral_norm(const Matrix& a) { return singular_values(a).front(); }

std::vector<double> symmetric_eigenvalues(const Matrix& a) {
  require_nonempty(a, "symmetric_eigenvalues");
  require_square(a, "symmetric_eigenvalues");
  const Eigen::MatrixXd m = to_eigen(a);
  const Eigen::MatrixXd sym = 0.5 * (m + m.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericalError("eigenvalue iteration failed");
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

LuFactors lu_partial_pivot(const Matrix& a) {
  require_nonempty(a, "lu");
  require_square(a, "lu");
  const std::size_t n = a.rows();
  LuFactors f{a, {}, 1, std::nullopt};
  f.perm.resize(n);
  for (std::size_t i = 0; i < n; ++i) f.perm[i] = i;
  Matrix& lu = f.lu;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    double best = std::abs(lu(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(lu(i, k)) > best) {
        best = std::abs(lu(i, k));
        p = i;
      }
    }
    if (best == 0.0) {
      if (!f.zero_pivot) f.zero_pivot = k;
      continue;
    }
    if (p != k) {
      std::swap_ranges(lu.row(k).begin(), lu.row(k).end(), lu.row(p).begin());
      std::swap(f.perm[k], f.perm[p]);
      f.sign = -f.sign;
    }
    const double pivot = lu(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double l = lu(i, k) / pivot;
      lu(i, k) = l;
      if (l == 0.0) continue;
      for (std::size_t j = k + 1; j < n; ++j) lu(i, j) -= l * lu(k, j);
    }
  }
  return f;
}

double determinant(const Matrix& a) {
  const LuFactors f = lu_partial_pivot(a);
  if (f.zero_pivot) return 0.0;
  double det = f.sign;
  for (std::size_t k = 0; k < a.rows(); ++k) det *= f.lu(k, k);
  return det;
}

Matrix solve(const Matrix& a, const Matrix& b) {
  const LuFactors f = lu_partial_pivot(a);
  if (f.zero_pivot) {
    throw NumericalError("singular matrix: zero pivot at elimination step " +
                         std::to_string(*f.zero_pivot + 1));
  }
  const std::size_t n = a.rows();
  if (b.rows() != n) throw DimensionError("solve: right-hand side has wrong row count");
  Matrix x(n, b.cols());
  std::vector<double> y(n);
  for (std::size_t c = 0; c < b.cols(); ++c) {
    for (std::size_t i = 0; i < n; ++i) {
      double s = b(f.perm[i], c);
      for (std::size_t k = 0; k < i; ++k) s -= f.lu(i, k) * y[k];
      y[i] = s;
    }
    for (std::size_t i = n; i-- > 0;) {
      double s = y[i];
      for (std::size_t k = i + 1; k < n; ++k) s -= f.lu(i, k) * x(k, c);
      x(i, c) = s / f.lu(i, i);
    }
  }
  return x;
}

Matrix inverse(const Matrix& a) { return solve(a, Matrix::identity(a.rows())); }

Matrix triangular_inverse(const Matrix& t, bool lower) {
  require_nonempty(t, "triangular_inverse");
  require_square(t, "triangular_inverse");
  const std::size_t n = t.rows();
  for (std::size_t i = 0; i < n; ++i) {
    if (t(i, i) == 0.0) {
      throw NumericalError("triangular matrix has a zero diagonal entry at " +
                           std::to_string(i + 1));
    }
  }
  Matrix x(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    if (lower) {
      for (std::size_t i = c; i < n; ++i) {
        double s = (i == c) ? 1.0 : 0.0;
        for (std::size_t k = c; k < i; ++k) s -= t(i, k) * x(k, c);
        x(i, c) = s / t(i, i);
      }
    } else {
      for (std::size_t i = c + 1; i-- > 0;) {
        double s = (i == c) ? 1.0 : 0.0;
        for (std::size_t k = i + 1; k <= c; ++k) s -= t(i, k) * x(k, c);
        x(i, c) = s / t(i, i);
      }
    }
  }
  return x;
}

}  // namespace crossvol
