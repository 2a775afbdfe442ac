#include "crossvol/gallery.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "crossvol/errors.hpp"

namespace crossvol {

double SeededRng::normal() {
  const double u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(1.0 - u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

const std::vector<std::string>& gallery_names() {
  static const std::vector<std::string> names = {
      "identity",       "tridiag_bm",     "block_remark", "quad_growth",
      "bidiagonal",     "offdiag_identity", "kahan",      "kahan_spsd",
      "random_general", "random_spsd",    "random_dd",    "random_doubly_dd",
      "random_dd_unit_upper"};
  return names;
}

Matrix generate(const GallerySpec& spec) {
  if (spec.n == 0) throw ParameterError("gallery: size must be positive");
  const std::string& name = spec.name;
  if (name == "identity") return gallery::identity(spec.n);
  if (name == "tridiag_bm") return gallery::tridiag_bm(spec.n);
  if (name == "block_remark") return gallery::block_remark(spec.n);
  if (name == "quad_growth") return gallery::quad_growth(spec.n);
  if (name == "bidiagonal") return gallery::bidiagonal(spec.n);
  if (name == "offdiag_identity") return gallery::offdiag_identity(spec.n);
  if (name == "kahan") return gallery::kahan(spec.n, spec.theta);
  if (name == "kahan_spsd") return gallery::kahan_spsd(spec.n, spec.theta);
  if (name == "random_general") return gallery::random_general(spec.n, spec.seed);
  if (name == "random_spsd") return gallery::random_spsd(spec.n, spec.seed);
  if (name == "random_dd") return gallery::random_dd(spec.n, spec.seed);
  if (name == "random_doubly_dd") return gallery::random_doubly_dd(spec.n, spec.seed);
  if (name == "random_dd_unit_upper") return gallery::random_dd_unit_upper(spec.n, spec.seed);
  throw UsageError("unknown gallery family '" + name + "'");
}

namespace gallery {

namespace {

Matrix random_offdiagonal(std::size_t n, SeededRng& rng) {
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) a(i, j) = rng.uniform(-1.0, 1.0);
  return a;
}

double offdiagonal_row_sum(const Matrix& a, std::size_t i) {
  double s = 0.0;
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (j != i) s += std::abs(a(i, j));
  return s;
}

double offdiagonal_col_sum(const Matrix& a, std::size_t j) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    if (i != j) s += std::abs(a(i, j));
  return s;
}

}  // namespace

Matrix identity(std::size_t n) { return Matrix::identity(n); }

Matrix tridiag_bm(std::size_t m) {
  Matrix b(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    b(i, i) = 1.0;
    if (i + 1 < m) {
      b(i + 1, i) = 0.5;
      b(i, i + 1) = -0.5;
    }
  }
  return b;
}

Matrix block_remark(std::size_t m) {
  Matrix a(2 * m, 2 * m);
  const Matrix b = tridiag_bm(m);
  for (std::size_t i = 0; i < m; ++i) {
    a(i, i) = 1.0;
    for (std::size_t j = 0; j < m; ++j) a(m + i, m + j) = b(i, j);
  }
  return a;
}

Matrix quad_growth(std::size_t n) {
  if (n % 2 != 0) throw ParameterError("quad_growth: n must be even, got " + std::to_string(n));
  const std::size_t h = n / 2;
  Matrix a(n, n);
  for (std::size_t i = 0; i < h; ++i) {
    a(i, i) = 1.0;
    if (i + 1 < h) a(i, i + 1) = -1.0;
  }
  const double coupling = -1.0 / static_cast<double>(h + 1);
  for (std::size_t j = h; j < n; ++j) a(h - 1, j) = coupling;
  for (std::size_t i = h; i < n; ++i) {
    a(i, 0) = -1.0;
    a(i, i) = 1.0;
  }
  return a;
}

Matrix bidiagonal(std::size_t n) {
  Matrix b(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    b(i, i) = 1.0;
    if (i + 1 < n) b(i + 1, i) = -1.0;
  }
  return b;
}

Matrix offdiag_identity(std::size_t k) {
  Matrix a(2 * k, 2 * k);
  for (std::size_t i = 0; i < k; ++i) {
    a(i, k + i) = 1.0;
    a(k + i, i) = 1.0;
  }
  return a;
}

Matrix kahan(std::size_t n, double theta) {
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  constexpr double eps = std::numeric_limits<double>::epsilon();
  Matrix r(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const double scale = std::pow(s, static_cast<double>(i));
    r(i, i) = scale * (1.0 + 25.0 * eps * static_cast<double>(n - 1 - i));
    for (std::size_t j = i + 1; j < n; ++j) r(i, j) = -c * scale;
  }
  return r;
}

Matrix kahan_spsd(std::size_t n, double theta) {
  const Matrix r = kahan(n, theta);
  return r.transpose() * r;
}

Matrix random_general(std::size_t n, std::uint64_t seed) {
  SeededRng rng(seed);
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = rng.normal();
  return a;
}

Matrix random_spsd(std::size_t n, std::uint64_t seed) {
  const Matrix g = random_general(n, seed);
  Matrix a = g.transpose() * g;
  // Exact symmetry regardless of summation order.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) a(j, i) = a(i, j);
  return a;
}

Matrix random_dd(std::size_t n, std::uint64_t seed) {
  SeededRng rng(seed);
  Matrix a = random_offdiagonal(n, rng);
  for (std::size_t i = 0; i < n; ++i) {
    double sum = offdiagonal_row_sum(a, i);
    if (sum == 0.0) sum = 1.0;
    a(i, i) = sum * (1.0 + rng.uniform());
  }
  return a;
}

Matrix random_doubly_dd(std::size_t n, std::uint64_t seed) {
  SeededRng rng(seed);
  Matrix a = random_offdiagonal(n, rng);
  for (std::size_t i = 0; i < n; ++i) {
    double sum = std::max(offdiagonal_row_sum(a, i), offdiagonal_col_sum(a, i));
    if (sum == 0.0) sum = 1.0;
    a(i, i) = sum * (1.0 + rng.uniform());
  }
  return a;
}

Matrix random_dd_unit_upper(std::size_t n, std::uint64_t seed) {
  SeededRng rng(seed);
  Matrix t = Matrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    double sum = 0.0;
    for (std::size_t j = i + 1; j < n; ++j) {
      t(i, j) = rng.uniform(-1.0, 1.0);
      sum += std::abs(t(i, j));
    }
    const double target = 0.05 + 0.9 * rng.uniform();
    if (sum > 0.0) {
      for (std::size_t j = i + 1; j < n; ++j) t(i, j) *= target / sum;
    }
  }
  return t;
}

double tridiag_bm_determinant(std::size_t m) {
  double previous = 1.0;  // d_0
  double current = 1.0;   // d_1
  if (m == 0) return previous;
  for (std::size_t k = 2; k <= m; ++k) {
    const double next = current + previous / 4.0;
    previous = current;
    current = next;
  }
  return current;
}

}  // namespace gallery
}  // namespace crossvol
