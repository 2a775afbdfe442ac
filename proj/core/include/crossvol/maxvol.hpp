#pragma once

#include <cstddef>
#include <cstdint>

#include "crossvol/matrix.hpp"

namespace crossvol {

struct VolumeResult {
  IndexSet row_set;
  IndexSet col_set;
  double volume = 0.0;

  bool is_principal() const { return row_set == col_set; }
};

/// |det A(I, J)|. Throws DimensionError when |I| != |J| or either is empty.
double volume(const Matrix& a, const IndexSet& rows, const IndexSet& cols);

struct MaxvolOptions {
  /// Largest number of (I, J) pairs (or I alone when principal_only) visited.
  std::uint64_t enumeration_cap = 10'000'000;
};

/// Number of k-subsets of an n-set, saturating at UINT64_MAX.
std::uint64_t binomial(std::size_t n, std::size_t k);

/// Exact maximum-volume k x k submatrix by enumeration.
///
/// Pairs are visited in lexicographic order of (I, J) and a candidate only
/// replaces the incumbent when strictly larger, so ties resolve to the
/// lexicographically smallest pair. The result is identical for any thread
/// count.
VolumeResult brute_force_maxvol(const Matrix& a, std::size_t k, bool principal_only,
                                const MaxvolOptions& options = {});

struct PrincipalCheck {
  bool holds = false;
  VolumeResult overall;
  VolumeResult principal;
};

inline constexpr double kVolumeRelTol = 1e-9;

/// Whether the largest principal k x k volume reaches the overall maximum,
/// up to `rel_tol` relative to the overall maximum. Both maximizers are
/// returned as witnesses; no uniqueness is implied.
PrincipalCheck check_principal_optimality(const Matrix& a, std::size_t k,
                                          double rel_tol = kVolumeRelTol,
                                          const MaxvolOptions& options = {});

/// Volume of the column selection B(:, I): the product of its singular values.
/// An empty selection has volume 1 (empty product).
double column_volume(const Matrix& b, const IndexSet& cols);

}  // namespace crossvol
