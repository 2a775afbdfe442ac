#pragma once

#include <cstddef>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "crossvol/matrix.hpp"

namespace crossvol {

/// Seeded generator shared by every random family.
///
/// Algorithm: 64-bit Mersenne Twister (MT19937-64, std::mt19937_64) seeded
/// with the integer seed. uniform() = (next() >> 11) * 2^-53, a double in
/// [0, 1). normal() draws u1, u2 with uniform() and returns
/// sqrt(-2 ln(1 - u1)) cos(2 pi u2) (Box-Muller, cosine branch only).
/// Matrices are filled row-major. None of the std distributions are used,
/// so streams are reproducible across standard libraries.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double normal();

 private:
  std::mt19937_64 engine_;
};

/// cos(theta) = 0.6.
inline const double kKahanDefaultTheta = 0.9272952180016122;

struct GallerySpec {
  std::string name;
  std::size_t n = 0;
  double theta = kKahanDefaultTheta;
  std::uint64_t seed = 0;
};

/// Catalog of family names accepted by generate().
const std::vector<std::string>& gallery_names();

/// Dispatches on spec.name. Throws UsageError for unknown names and
/// ParameterError for invalid parameters.
Matrix generate(const GallerySpec& spec);

namespace gallery {

Matrix identity(std::size_t n);

/// tridiag[1/2, 1, -1/2]: 1 on the diagonal, 1/2 below, -1/2 above.
Matrix tridiag_bm(std::size_t m);

/// diag(I_m, B_m), 2m x 2m.
Matrix block_remark(std::size_t m);

/// n x n (n even) diagonally dominant matrix whose complete-pivoting LDU
/// factorization shows quadratic growth of |A^{-1}|.
Matrix quad_growth(std::size_t n);

/// 1 on the diagonal, -1 on the first subdiagonal.
Matrix bidiagonal(std::size_t n);

/// 2k x 2k [[0, I], [I, 0]].
Matrix offdiag_identity(std::size_t k);

/// Kahan's graded upper triangular matrix diag(1, s, ..., s^{n-1}) times the
/// unit upper triangular matrix with -c above the diagonal (s = sin theta,
/// c = cos theta). Diagonal entry j is further scaled by
/// 1 + 25 eps (n - 1 - j) so that pivoting never interchanges.
Matrix kahan(std::size_t n, double theta = kKahanDefaultTheta);

/// R^T R for R = kahan(n, theta): SPSD, unit diagonal up to the perturbation.
Matrix kahan_spsd(std::size_t n, double theta = kKahanDefaultTheta);

/// Standard-normal entries.
Matrix random_general(std::size_t n, std::uint64_t seed);

/// G^T G with standard-normal G.
Matrix random_spsd(std::size_t n, std::uint64_t seed);

/// Off-diagonals uniform in [-1, 1]; diagonal = (row sum of |off-diagonal|) * (1 + u).
Matrix random_dd(std::size_t n, std::uint64_t seed);

/// Off-diagonals uniform in [-1, 1]; diagonal = max(row sum, column sum) * (1 + u).
Matrix random_doubly_dd(std::size_t n, std::uint64_t seed);

/// Strictly diagonally dominant unit upper triangular: the off-diagonal
/// magnitudes in row i sum to 0.05 + 0.9 u < 1.
Matrix random_dd_unit_upper(std::size_t n, std::uint64_t seed);

/// det(tridiag_bm(m)) by the recurrence d_k = d_{k-1} + d_{k-2} / 4.
double tridiag_bm_determinant(std::size_t m);

}  // namespace gallery
}  // namespace crossvol
