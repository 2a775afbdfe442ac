#include "crossvol/cross.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "crossvol/classify.hpp"
#include "crossvol/errors.hpp"
#include "crossvol/linalg.hpp"

namespace crossvol {

std::string_view to_string(PivotStrategy s) {
  return s == PivotStrategy::full ? "full" : "diagonal";
}

std::string_view to_string(Termination t) {
  return t == Termination::requested_rank ? "requested_rank" : "breakdown";
}

PivotStrategy parse_strategy(std::string_view name) {
  if (name == "full") return PivotStrategy::full;
  if (name == "diagonal") return PivotStrategy::diagonal;
  throw UsageError("unknown pivot strategy '" + std::string(name) + "' (expected full|diagonal)");
}

std::vector<double> CrossResult::pivot_values_with_lookahead() const {
  std::vector<double> out;
  out.reserve(pivots.size() + 1);
  for (const Pivot& p : pivots) out.push_back(p.value);
  if (lookahead) out.push_back(lookahead->value);
  return out;
}

CrossResult cross_approximate(const Matrix& a, std::size_t m, PivotStrategy strategy,
                              const CrossOptions& options) {
  if (a.empty()) throw DimensionError("cross_approximate: empty matrix");
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  const std::size_t max_steps = std::min(rows, cols);
  if (m == 0 || m > max_steps) {
    throw DimensionError("cross_approximate: m = " + std::to_string(m) + " outside 1.." +
                         std::to_string(max_steps));
  }
  if (strategy == PivotStrategy::diagonal) {
    if (!a.is_square()) {
      throw PreconditionError("diagonal pivoting requires a square matrix");
    }
    const MatrixClass cls = classify(a);
    if (!cls.is_spsd && !cls.is_dd) {
      throw PreconditionError(
          "diagonal pivoting requires an SPSD or diagonally dominant matrix");
    }
  }

  const double threshold = options.breakdown_tol * max_norm(a);
  Matrix r = a;
  std::vector<bool> row_used(rows, false);
  std::vector<bool> col_used(cols, false);

  // First maximal |R(i, j)| in row-major order over the unused rows and
  // columns (the diagonal only, for the diagonal strategy).
  auto search = [&]() -> std::optional<Pivot> {
    std::optional<Pivot> best;
    double best_abs = -1.0;
    for (std::size_t i = 0; i < rows; ++i) {
      if (row_used[i]) continue;
      if (strategy == PivotStrategy::diagonal) {
        if (std::abs(r(i, i)) > best_abs) {
          best_abs = std::abs(r(i, i));
          best = Pivot{i, i, r(i, i)};
        }
        continue;
      }
      for (std::size_t j = 0; j < cols; ++j) {
        if (col_used[j]) continue;
        if (std::abs(r(i, j)) > best_abs) {
          best_abs = std::abs(r(i, j));
          best = Pivot{i, j, r(i, j)};
        }
      }
    }
    return best;
  };

  CrossResult result;
  std::vector<std::vector<double>> col_factors;
  std::vector<std::vector<double>> row_factors;
  std::vector<double> col(rows);
  std::vector<double> row(cols);

  for (std::size_t step = 0; step < m; ++step) {
    const std::optional<Pivot> candidate = search();
    if (!candidate || std::abs(candidate->value) <= threshold) {
      result.lookahead = candidate;
      result.termination = Termination::breakdown;
      break;
    }
    const Pivot pivot = *candidate;
    const double p = pivot.value;
    for (std::size_t i = 0; i < rows; ++i) col[i] = r(i, pivot.col);
    for (std::size_t j = 0; j < cols; ++j) row[j] = r(pivot.row, j);

    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) r(i, j) -= col[i] * row[j] / p;
    }
    // The pivot row and column vanish exactly.
    for (std::size_t j = 0; j < cols; ++j) r(pivot.row, j) = 0.0;
    for (std::size_t i = 0; i < rows; ++i) r(i, pivot.col) = 0.0;

    row_used[pivot.row] = true;
    col_used[pivot.col] = true;
    result.pivots.push_back(pivot);
    col_factors.push_back(col);
    std::vector<double> scaled(cols);
    for (std::size_t j = 0; j < cols; ++j) scaled[j] = row[j] / p;
    row_factors.push_back(std::move(scaled));
  }
  if (result.termination == Termination::requested_rank) result.lookahead = search();

  const std::size_t steps = result.pivots.size();
  result.steps_completed = steps;
  result.col_factors = Matrix(rows, steps);
  result.row_factors = Matrix(steps, cols);
  for (std::size_t k = 0; k < steps; ++k) {
    for (std::size_t i = 0; i < rows; ++i) result.col_factors(i, k) = col_factors[k][i];
    for (std::size_t j = 0; j < cols; ++j) result.row_factors(k, j) = row_factors[k][j];
  }
  std::vector<std::size_t> pivot_rows;
  std::vector<std::size_t> pivot_cols;
  for (const Pivot& p : result.pivots) {
    pivot_rows.push_back(p.row);
    pivot_cols.push_back(p.col);
  }
  result.row_set = IndexSet::from_unsorted(std::move(pivot_rows));
  result.col_set = IndexSet::from_unsorted(std::move(pivot_cols));
  result.residual_max = max_norm(r);
  result.residual = std::move(r);
  return result;
}

Matrix skeleton(const Matrix& a, const CrossResult& result) {
  const std::size_t k = result.pivots.size();
  if (k == 0) return Matrix(a.rows(), a.cols());
  std::vector<std::size_t> pivot_rows;
  std::vector<std::size_t> pivot_cols;
  for (const Pivot& p : result.pivots) {
    pivot_rows.push_back(p.row);
    pivot_cols.push_back(p.col);
  }
  std::vector<std::size_t> all_rows(a.rows());
  std::vector<std::size_t> all_cols(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) all_rows[i] = i;
  for (std::size_t j = 0; j < a.cols(); ++j) all_cols[j] = j;

  const Matrix core = a.submatrix(pivot_rows, pivot_cols);
  const LuFactors lu = lu_partial_pivot(core);
  if (lu.zero_pivot) {
    throw NumericalError("skeleton: A(I, J) is singular; elimination fails at pivot " +
                         std::to_string(*lu.zero_pivot + 1));
  }
  const Matrix coupling = solve(core, a.submatrix(pivot_rows, all_cols));
  return a.submatrix(all_rows, pivot_cols) * coupling;
}

double skeleton_error(const Matrix& a, const CrossResult& result) {
  return max_norm(a - skeleton(a, result));
}

GrowthReport realized_growth(std::span<const double> pivots, const Matrix& a) {
  if (pivots.empty()) throw PreconditionError("realized_growth: empty pivot list");
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    if (pivots[k] == 0.0) {
      throw NumericalError("realized_growth: zero pivot at position " + std::to_string(k + 1));
    }
  }
  const double first = std::abs(pivots.front());
  const double scale = max_norm(a);
  if (std::abs(first - scale) > 1e-12 * scale) {
    throw PreconditionError("realized_growth: |p_1| differs from |A|_max");
  }
  GrowthReport report;
  if (pivots.size() == 1) return report;
  double growth = 0.0;
  double smallest_before_last = std::abs(pivots.front());
  for (std::size_t k = 1; k < pivots.size(); ++k) {
    growth = std::max(growth, std::abs(pivots[k]) / first);
    if (k + 1 < pivots.size()) smallest_before_last = std::min(smallest_before_last, std::abs(pivots[k]));
  }
  report.growth = growth;
  report.stepwise = std::abs(pivots.back()) / smallest_before_last;
  return report;
}

PivotFactors pivot_factors(const CrossResult& result) {
  const std::size_t steps = result.pivots.size();
  const std::size_t k = steps + (result.lookahead ? 1 : 0);
  PivotFactors f{Matrix(k, k), Matrix(k, k)};
  std::vector<std::size_t> row_order;
  std::vector<std::size_t> col_order;
  for (const Pivot& p : result.pivots) {
    row_order.push_back(p.row);
    col_order.push_back(p.col);
  }
  if (result.lookahead) {
    row_order.push_back(result.lookahead->row);
    col_order.push_back(result.lookahead->col);
  }
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < steps; ++b) {
      f.l11(a, b) = result.col_factors(row_order[a], b);
      f.u11(b, a) = result.row_factors(b, col_order[a]);
    }
  }
  if (result.lookahead) {
    f.l11(steps, steps) = result.lookahead->value;
    f.u11(steps, steps) = 1.0;
  }
  return f;
}

LduDiagnostics ldu_diagnostics(const Matrix& a, const CrossResult& result) {
  if (!a.is_square() || a.rows() < 2) {
    throw PreconditionError("ldu_diagnostics: square matrix of order >= 2 required");
  }
  const std::size_t n = a.rows();
  if (result.steps_completed != n - 1 || !result.lookahead) {
    throw PreconditionError("ldu_diagnostics: needs n - 1 = " + std::to_string(n - 1) +
                            " completed steps plus the final pivot, got " +
                            std::to_string(result.steps_completed));
  }
  if (result.lookahead->value == 0.0) {
    throw NumericalError("ldu_diagnostics: final pivot is zero (singular matrix)");
  }

  const PivotFactors f = pivot_factors(result);
  const std::vector<double> p = result.pivot_values_with_lookahead();

  LduDiagnostics diag;
  diag.d = Matrix::diagonal(p);
  diag.l = f.l11;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) diag.l(i, j) /= p[j];
  diag.u = f.u11;
  for (const Pivot& pv : result.pivots) {
    diag.row_order.push_back(pv.row);
    diag.col_order.push_back(pv.col);
  }
  diag.row_order.push_back(result.lookahead->row);
  diag.col_order.push_back(result.lookahead->col);

  diag.norm_l_inv = spectral_norm(triangular_inverse(diag.l, true));
  diag.norm_u_inv = spectral_norm(triangular_inverse(diag.u, false));
  diag.norm_d_inv = 0.0;
  for (double v : p) diag.norm_d_inv = std::max(diag.norm_d_inv, 1.0 / std::abs(v));
  diag.last_pivot = p.back();

  const double sigma_min = singular_values(a).back();
  if (sigma_min == 0.0) throw NumericalError("ldu_diagnostics: matrix is singular");
  diag.r_m = std::abs(diag.last_pivot) / sigma_min;
  diag.realized_growth = realized_growth(p, a).growth;
  diag.reconstruction_error =
      max_norm(a.submatrix(diag.row_order, diag.col_order) - diag.l * diag.d * diag.u);
  for (std::size_t k = 0; k < n; ++k) {
    if (diag.row_order[k] != k || diag.col_order[k] != k) diag.interchanges_performed = true;
  }
  return diag;
}

}  // namespace crossvol
