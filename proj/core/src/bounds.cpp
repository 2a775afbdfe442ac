#include "crossvol/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "crossvol/errors.hpp"
#include "crossvol/linalg.hpp"
#include "crossvol/maxvol.hpp"

namespace crossvol {

namespace {

double pow2(std::size_t e) { return std::ldexp(1.0, static_cast<int>(e)); }

double ratio(double achieved, double rhs) {
  if (achieved == 0.0) return 0.0;
  if (rhs == 0.0) return std::numeric_limits<double>::infinity();
  return achieved / rhs;
}

double skeleton_error_for(const Matrix& a, const IndexSet& rows, const IndexSet& cols) {
  std::vector<std::size_t> all_rows(a.rows());
  std::vector<std::size_t> all_cols(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) all_rows[i] = i;
  for (std::size_t j = 0; j < a.cols(); ++j) all_cols[j] = j;
  const Matrix core = a.submatrix(rows.view(), cols.view());
  const Matrix coupling = solve(core, a.submatrix(rows.view(), all_cols));
  return max_norm(a - a.submatrix(all_rows, cols.view()) * coupling);
}

}  // namespace

double wilkinson_bound(std::size_t k) {
  if (k == 0) return 1.0;
  double log_product = 0.0;
  for (std::size_t j = 2; j <= k + 1; ++j) {
    log_product += std::log(static_cast<double>(j)) / static_cast<double>(j - 1);
  }
  return std::exp(0.5 * std::log(static_cast<double>(k + 1)) + 0.5 * log_product);
}

double wilkinson_majorant(std::size_t k) {
  const double kp1 = static_cast<double>(k + 1);
  return 2.0 * std::sqrt(kp1) * std::pow(kp1, std::log(kp1) / 4.0);
}

std::string_view to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::goreinov: return "goreinov";
    case BoundKind::general: return "general";
    case BoundKind::mixed: return "mixed";
    case BoundKind::spsd: return "spsd";
    case BoundKind::dd: return "dd";
    case BoundKind::doubly_dd: return "doubly_dd";
  }
  return "unknown";
}

BoundKind parse_bound_kind(std::string_view name) {
  for (BoundKind k : {BoundKind::goreinov, BoundKind::general, BoundKind::mixed, BoundKind::spsd,
                      BoundKind::dd, BoundKind::doubly_dd}) {
    if (to_string(k) == name) return k;
  }
  throw UsageError("unknown bound kind '" + std::string(name) + "'");
}

double rhs_bound(BoundKind kind, std::size_t m, double sigma_next, double rho, double gamma) {
  const double mp1 = static_cast<double>(m + 1);
  switch (kind) {
    case BoundKind::goreinov: return mp1 * sigma_next;
    case BoundKind::general: return pow2(2 * m) * rho * sigma_next;
    case BoundKind::mixed: return pow2(2 * m + 1) * rho * gamma;
    case BoundKind::spsd: return pow2(2 * m) * sigma_next;
    case BoundKind::dd: return mp1 * pow2(m + 1) * sigma_next;
    case BoundKind::doubly_dd: return 2.0 * mp1 * mp1 * sigma_next;
  }
  throw UsageError("unknown bound kind");
}

double gamma_last(const Matrix& a) {
  if (!a.is_square() || a.empty()) throw DimensionError("gamma_last: square matrix required");
  if (a.cols() > kInfToOneColumnCap) {
    throw CapabilityError("gamma_last: order " + std::to_string(a.cols()) +
                          " exceeds the sign-vector cap " + std::to_string(kInfToOneColumnCap));
  }
  return 1.0 / inf_to_one_norm(inverse(a));
}

GammaBracket gamma_bracket(const Matrix& a, std::size_t k) {
  const std::vector<double> sv = singular_values(a);
  if (k >= sv.size()) {
    throw DimensionError("gamma_bracket: k = " + std::to_string(k) + " has no sigma_{k+1}");
  }
  GammaBracket g;
  g.k = k;
  g.upper = sv[k];
  // |E|_2 <= sqrt(rows * cols) |E|_max; for square matrices this is n.
  g.lower = sv[k] / std::sqrt(static_cast<double>(a.rows() * a.cols()));
  if (a.is_square() && k + 1 == a.rows() && a.rows() <= kInfToOneColumnCap) {
    try {
      g.exact = sv[k] == 0.0 ? 0.0 : gamma_last(a);
    } catch (const NumericalError&) {
      g.exact = 0.0;  // exactly singular in floating point
    }
  }
  return g;
}

double min_pivot_factor(const MatrixClass& cls, std::size_t m) {
  const double mp1 = static_cast<double>(m + 1);
  if (cls.is_doubly_dd) return mp1 * mp1;
  if (cls.is_dd) return mp1 * pow2(m);
  return pow2(2 * m);
}

MinPivotReport min_pivot_check(const Matrix& a, const CrossResult& result,
                               const MatrixClass& cls) {
  if (!result.lookahead) {
    throw PreconditionError("min_pivot_check: the lookahead pivot p_{m+1} is missing");
  }
  MinPivotReport report;
  report.m = result.steps_completed;
  report.min_pivot = std::numeric_limits<double>::infinity();
  for (double p : result.pivot_values_with_lookahead()) {
    report.min_pivot = std::min(report.min_pivot, std::abs(p));
  }
  report.factor = min_pivot_factor(cls, report.m);
  report.sigma_next = singular_values(a).at(report.m);
  report.rhs = report.factor * report.sigma_next;
  report.slack = report.rhs - report.min_pivot;
  report.holds = report.min_pivot <= report.rhs * (1.0 + kBoundRelTol);
  return report;
}

bool BoundReport::all_satisfied() const {
  return std::all_of(ratios.begin(), ratios.end(),
                     [](const auto& kv) { return kv.second <= 1.0 + kBoundRelTol; });
}

BoundReport bound_report(const Matrix& a, std::size_t m) {
  if (!a.is_square() || a.empty()) throw DimensionError("bound_report: square matrix required");
  const std::size_t n = a.rows();
  if (m == 0 || m >= n) {
    throw DimensionError("bound_report: m = " + std::to_string(m) + " outside 1.." +
                         std::to_string(n - 1));
  }
  BoundReport report;
  report.n_rows = n;
  report.n_cols = n;
  report.m = m;
  report.matrix_class = classify(a);

  const std::vector<double> sv = singular_values(a);
  report.numerical_rank = static_cast<std::size_t>(
      std::count_if(sv.begin(), sv.end(), [&](double s) { return s > kRankThreshold * sv[0]; }));
  if (m > report.numerical_rank) {
    throw RankError("bound_report: m = " + std::to_string(m) + " exceeds the numerical rank " +
                    std::to_string(report.numerical_rank));
  }

  const CrossResult result = cross_approximate(a, m, PivotStrategy::full);
  if (result.steps_completed < m) {
    throw RankError("bound_report: cross approximation broke down after " +
                    std::to_string(result.steps_completed) + " steps");
  }
  report.pivots = result.pivots;
  if (result.lookahead) report.pivots.push_back(*result.lookahead);
  report.achieved_error = skeleton_error(a, result);
  report.residual_max = result.residual_max;
  report.sigma_next = sv[m];
  report.min_pivot = std::numeric_limits<double>::infinity();
  for (const Pivot& p : report.pivots) report.min_pivot = std::min(report.min_pivot, std::abs(p.value));
  report.rho = wilkinson_bound(m);
  report.gamma = gamma_bracket(a, m);

  auto add = [&](BoundKind kind, double rhs, double achieved) {
    const std::string key(to_string(kind));
    report.bounds[key] = rhs;
    report.ratios[key] = ratio(achieved, rhs);
  };
  const double sigma = report.sigma_next;
  const double err = report.achieved_error;
  add(BoundKind::general, rhs_bound(BoundKind::general, m, sigma, report.rho), err);
  add(BoundKind::mixed,
      rhs_bound(BoundKind::mixed, m, sigma, report.rho, report.gamma.exact.value_or(report.gamma.upper)),
      err);
  if (report.matrix_class.is_spsd) add(BoundKind::spsd, rhs_bound(BoundKind::spsd, m, sigma), err);
  if (report.matrix_class.is_dd) add(BoundKind::dd, rhs_bound(BoundKind::dd, m, sigma), err);
  if (report.matrix_class.is_doubly_dd) {
    add(BoundKind::doubly_dd, rhs_bound(BoundKind::doubly_dd, m, sigma), err);
  }

  const std::uint64_t subsets = binomial(n, m);
  const MaxvolOptions maxvol_options;
  if (subsets <= maxvol_options.enumeration_cap / subsets) {
    const VolumeResult best = brute_force_maxvol(a, m, false, maxvol_options);
    if (best.volume > 0.0) {
      report.maxvol_error = skeleton_error_for(a, best.row_set, best.col_set);
      add(BoundKind::goreinov, rhs_bound(BoundKind::goreinov, m, sigma), *report.maxvol_error);
    }
  }
  return report;
}

}  // namespace crossvol
