#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "crossvol/classify.hpp"
#include "crossvol/cross.hpp"
#include "crossvol/matrix.hpp"

namespace crossvol {

/// Wilkinson's bound on the complete-pivoting growth factor after k steps,
/// sqrt(k+1) * sqrt(2 * 3^(1/2) * 4^(1/3) * ... * (k+1)^(1/k)).
/// k = 0 gives 1.
double wilkinson_bound(std::size_t k);

/// Closed-form majorant 2 sqrt(k+1) (k+1)^(ln(k+1)/4) of wilkinson_bound.
double wilkinson_majorant(std::size_t k);

enum class BoundKind { goreinov, general, mixed, spsd, dd, doubly_dd };

std::string_view to_string(BoundKind kind);
/// Throws UsageError for unknown names.
BoundKind parse_bound_kind(std::string_view name);

/// Right-hand side of a max-norm error bound after m steps:
///   goreinov   (m+1) sigma
///   general    4^m rho sigma
///   mixed      2^(2m+1) rho gamma
///   spsd       4^m sigma
///   dd         (m+1) 2^(m+1) sigma
///   doubly_dd  2 (m+1)^2 sigma
/// Parameters a kind does not use are ignored.
double rhs_bound(BoundKind kind, std::size_t m, double sigma_next, double rho = 1.0,
                 double gamma = 0.0);

/// Approximation number gamma_k(A) = min |E|_max with rank(A + E) <= k,
/// bracketed by sigma_{k+1}/n <= gamma_k <= sigma_{k+1}. The exact value is
/// only available for k = n - 1.
struct GammaBracket {
  std::size_t k = 0;
  double lower = 0.0;
  double upper = 0.0;
  std::optional<double> exact;

  friend bool operator==(const GammaBracket&, const GammaBracket&) = default;
};

/// gamma_{n-1}(A) = 1 / |A^{-1}|_{inf->1}. Throws NumericalError for
/// singular A and CapabilityError past the sign-vector cap.
double gamma_last(const Matrix& a);

GammaBracket gamma_bracket(const Matrix& a, std::size_t k);

/// Factor F in min_k |p_k| <= F sigma_{m+1}(A) for the class of A.
double min_pivot_factor(const MatrixClass& cls, std::size_t m);

struct MinPivotReport {
  std::size_t m = 0;
  double min_pivot = 0.0;
  double factor = 0.0;
  double sigma_next = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // rhs - min_pivot
  bool holds = false;
};

/// Checks min{|p_1|, ..., |p_{m+1}|} <= F(class, m) sigma_{m+1}(A).
/// Requires the lookahead pivot; throws PreconditionError otherwise.
MinPivotReport min_pivot_check(const Matrix& a, const CrossResult& result,
                               const MatrixClass& cls);

inline constexpr double kRankThreshold = 1e-10;
inline constexpr double kBoundRelTol = 1e-9;

struct BoundReport {
  MatrixClass matrix_class;
  std::size_t n_rows = 0;
  std::size_t n_cols = 0;
  std::size_t m = 0;
  std::size_t numerical_rank = 0;
  double achieved_error = 0.0;
  double residual_max = 0.0;
  double sigma_next = 0.0;
  double min_pivot = 0.0;
  double rho = 1.0;  // Wilkinson proxy used by the general and mixed kinds
  GammaBracket gamma;
  std::vector<Pivot> pivots;  // includes the lookahead pivot last
  std::optional<double> maxvol_error;  // error of the exhaustive maxvol skeleton
  std::map<std::string, double> bounds;
  std::map<std::string, double> ratios;

  /// achieved / rhs for every present bound is <= 1 + kBoundRelTol.
  bool all_satisfied() const;

  friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

/// Runs classification, full-pivoting cross approximation, the explicit
/// skeleton error and the SVD, then fills every bound whose class
/// precondition holds. The goreinov entry compares the exhaustive
/// maximum-volume skeleton, and is only present when that search fits the
/// enumeration cap. Throws RankError when m exceeds the numerical rank.
BoundReport bound_report(const Matrix& a, std::size_t m);

}  // namespace crossvol
