#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "crossvol/matrix.hpp"

namespace crossvol {

enum class PivotStrategy { full, diagonal };
enum class Termination { requested_rank, breakdown };

std::string_view to_string(PivotStrategy s);
std::string_view to_string(Termination t);
PivotStrategy parse_strategy(std::string_view name);

struct Pivot {
  std::size_t row = 0;
  std::size_t col = 0;
  double value = 0.0;

  friend bool operator==(const Pivot&, const Pivot&) = default;
};

inline constexpr double kBreakdownTol = 1e-12;

struct CrossOptions {
  /// A step breaks down when the best candidate is <= breakdown_tol * |A|_max.
  double breakdown_tol = kBreakdownTol;
};

/// Outcome of cross approximation with complete (or diagonal) pivoting.
///
/// `pivots` holds the completed steps in selection order. `lookahead` is the
/// candidate the next step would pick: p_{m+1} after m requested steps, or
/// the rejected candidate on breakdown. It is absent only when the residual
/// has no entries left.
struct CrossResult {
  std::vector<Pivot> pivots;
  std::optional<Pivot> lookahead;
  IndexSet row_set;
  IndexSet col_set;
  std::size_t steps_completed = 0;
  Termination termination = Termination::requested_rank;
  double residual_max = 0.0;
  Matrix residual;       // R_m, same shape as A
  Matrix col_factors;    // n_rows x m, column k is R_k(:, j_{k+1})
  Matrix row_factors;    // m x n_cols, row k is R_k(i_{k+1}, :) / p_{k+1}

  /// |p_1|, ..., |p_m| followed by the lookahead value when present.
  std::vector<double> pivot_values_with_lookahead() const;
};

/// Runs m Schur-update steps. Ties among maximal candidates go to the
/// smallest (row, col). The input is not modified.
///
/// Throws DimensionError when m is 0 or exceeds min(rows, cols), and
/// PreconditionError when the diagonal strategy is requested for a matrix
/// that is neither SPSD nor diagonally dominant.
CrossResult cross_approximate(const Matrix& a, std::size_t m, PivotStrategy strategy,
                              const CrossOptions& options = {});

/// Explicit skeleton A(:, J) A(I, J)^{-1} A(I, :).
Matrix skeleton(const Matrix& a, const CrossResult& result);

/// |A - skeleton|_max computed from the pristine input.
double skeleton_error(const Matrix& a, const CrossResult& result);

struct GrowthReport {
  double growth = 1.0;    // max_j |p_{j+1}| / |p_1|
  double stepwise = 1.0;  // max_j |p_{m+1}| / |p_{m-j+1}|
};

/// Growth realized along a pivot sequence p_1..p_{m+1} of A. Throws
/// NumericalError on a zero pivot and PreconditionError when |p_1| is not
/// |A|_max.
GrowthReport realized_growth(std::span<const double> pivots, const Matrix& a);

struct LduDiagnostics {
  Matrix l;  // unit lower triangular, pivot order
  Matrix d;  // diag(p_1, ..., p_n)
  Matrix u;  // unit upper triangular, pivot order
  std::vector<std::size_t> row_order;
  std::vector<std::size_t> col_order;
  double norm_l_inv = 0.0;
  double norm_u_inv = 0.0;
  double norm_d_inv = 0.0;
  double last_pivot = 0.0;  // p_n
  double r_m = 0.0;         // |p_n| * |A^{-1}|
  double realized_growth = 1.0;
  double reconstruction_error = 0.0;  // |A(rows, cols) - L D U|_max
  bool interchanges_performed = false;
};

/// L, D, U factors and their inverse norms from a complete sweep of m = n-1
/// steps plus the final pivot. Throws PreconditionError otherwise.
LduDiagnostics ldu_diagnostics(const Matrix& a, const CrossResult& result);

/// Leading (k x k) factors L11 (lower, column j scaled by p_j) and U11
/// (unit upper) in pivot order, where k = pivots + lookahead.
struct PivotFactors {
  Matrix l11;
  Matrix u11;
};
PivotFactors pivot_factors(const CrossResult& result);

}  // namespace crossvol
