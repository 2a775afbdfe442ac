#include "crossvol/maxvol.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "crossvol/errors.hpp"
#include "crossvol/linalg.hpp"
#include "crossvol/parallel.hpp"

namespace crossvol {

namespace {

// |det A(rows, cols)| by partial-pivoting elimination in a scratch buffer.
double abs_det(const Matrix& a, std::span<const std::size_t> rows,
               std::span<const std::size_t> cols, std::vector<double>& scratch) {
  const std::size_t k = rows.size();
  scratch.resize(k * k);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c) scratch[r * k + c] = a(rows[r], cols[c]);
  double det = 1.0;
  for (std::size_t p = 0; p < k; ++p) {
    std::size_t best = p;
    for (std::size_t r = p + 1; r < k; ++r) {
      if (std::abs(scratch[r * k + p]) > std::abs(scratch[best * k + p])) best = r;
    }
    const double pivot = scratch[best * k + p];
    if (pivot == 0.0) return 0.0;
    if (best != p) {
      for (std::size_t c = p; c < k; ++c) std::swap(scratch[p * k + c], scratch[best * k + c]);
    }
    det *= pivot;
    for (std::size_t r = p + 1; r < k; ++r) {
      const double l = scratch[r * k + p] / pivot;
      if (l == 0.0) continue;
      for (std::size_t c = p + 1; c < k; ++c) scratch[r * k + c] -= l * scratch[p * k + c];
    }
  }
  return std::abs(det);
}

// Lexicographically rank-th k-subset of {0, ..., n-1}.
std::vector<std::size_t> unrank_combination(std::size_t n, std::size_t k, std::uint64_t rank) {
  std::vector<std::size_t> out;
  out.reserve(k);
  std::size_t next = 0;
  for (std::size_t t = 0; t < k; ++t) {
    for (std::size_t c = next;; ++c) {
      const std::uint64_t with_c = binomial(n - c - 1, k - t - 1);
      if (rank < with_c) {
        out.push_back(c);
        next = c + 1;
        break;
      }
      rank -= with_c;
    }
  }
  return out;
}

bool next_combination(std::vector<std::size_t>& comb, std::size_t n) {
  const std::size_t k = comb.size();
  for (std::size_t t = k; t-- > 0;) {
    if (comb[t] < n - k + t) {
      ++comb[t];
      for (std::size_t u = t + 1; u < k; ++u) comb[u] = comb[u - 1] + 1;
      return true;
    }
  }
  return false;
}

struct Candidate {
  double volume = -1.0;
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
};

}  // namespace

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    const std::uint64_t num = n - k + i;
    if (result > std::numeric_limits<std::uint64_t>::max() / num) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    result = result * num / i;
  }
  return result;
}

double volume(const Matrix& a, const IndexSet& rows, const IndexSet& cols) {
  if (rows.size() != cols.size()) {
    throw DimensionError("volume: |I| = " + std::to_string(rows.size()) +
                         " differs from |J| = " + std::to_string(cols.size()));
  }
  if (rows.empty()) throw DimensionError("volume: empty index sets");
  rows.check_bounds(a.rows());
  cols.check_bounds(a.cols());
  std::vector<double> scratch;
  return abs_det(a, rows.view(), cols.view(), scratch);
}

VolumeResult brute_force_maxvol(const Matrix& a, std::size_t k, bool principal_only,
                                const MaxvolOptions& options) {
  if (!a.is_square() || a.empty()) throw DimensionError("maxvol: matrix must be square");
  const std::size_t n = a.rows();
  if (k == 0 || k > n) {
    throw DimensionError("maxvol: k = " + std::to_string(k) + " outside 1.." + std::to_string(n));
  }
  const std::uint64_t subsets = binomial(n, k);
  const std::uint64_t visits =
      principal_only ? subsets
      : (subsets > std::numeric_limits<std::uint64_t>::max() / subsets ? std::numeric_limits<std::uint64_t>::max()
                                                                        : subsets * subsets);
  if (visits > options.enumeration_cap) {
    throw CapabilityError("maxvol: " + std::to_string(visits) + " submatrices exceed the cap " +
                          std::to_string(options.enumeration_cap));
  }

  std::vector<std::vector<std::size_t>> all_cols;
  if (!principal_only) {
    all_cols.reserve(subsets);
    std::vector<std::size_t> comb(k);
    for (std::size_t t = 0; t < k; ++t) comb[t] = t;
    do all_cols.push_back(comb);
    while (next_combination(comb, n));
  }

  std::vector<Candidate> best(thread_count());
  const std::size_t chunks = parallel_chunks(
      subsets, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
        std::vector<double> scratch;
        Candidate local;
        std::vector<std::size_t> rows = unrank_combination(n, k, begin);
        for (std::size_t rank = begin; rank < end; ++rank) {
          if (principal_only) {
            const double v = abs_det(a, rows, rows, scratch);
            if (v > local.volume) local = {v, rows, rows};
          } else {
            for (const auto& cols : all_cols) {
              const double v = abs_det(a, rows, cols, scratch);
              if (v > local.volume) local = {v, rows, cols};
            }
          }
          next_combination(rows, n);
        }
        best[chunk] = std::move(local);
      });

  Candidate winner;
  for (std::size_t c = 0; c < chunks; ++c) {
    if (best[c].volume > winner.volume) winner = std::move(best[c]);
  }
  return {IndexSet(std::move(winner.rows)), IndexSet(std::move(winner.cols)), winner.volume};
}

PrincipalCheck check_principal_optimality(const Matrix& a, std::size_t k, double rel_tol,
                                          const MaxvolOptions& options) {
  PrincipalCheck check;
  check.overall = brute_force_maxvol(a, k, false, options);
  check.principal = brute_force_maxvol(a, k, true, options);
  check.holds =
      check.principal.volume >= check.overall.volume - rel_tol * check.overall.volume;
  return check;
}

double column_volume(const Matrix& b, const IndexSet& cols) {
  if (cols.empty()) return 1.0;
  cols.check_bounds(b.cols());
  // More columns than rows: at least one singular value is zero.
  if (cols.size() > b.rows()) return 0.0;
  std::vector<std::size_t> all_rows(b.rows());
  for (std::size_t i = 0; i < b.rows(); ++i) all_rows[i] = i;
  double product = 1.0;
  for (double s : singular_values(b.submatrix(all_rows, cols.view()))) product *= s;
  return product;
}

}  // namespace crossvol
