#include "crossvol/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include "crossvol/bounds.hpp"
#include "crossvol/classify.hpp"
#include "crossvol/cross.hpp"
#include "crossvol/errors.hpp"
#include "crossvol/funcross.hpp"
#include "crossvol/gallery.hpp"
#include "crossvol/io.hpp"
#include "crossvol/linalg.hpp"
#include "crossvol/maxvol.hpp"
#include "crossvol/serialize.hpp"

namespace crossvol::verify {

namespace {

using Clock = std::chrono::steady_clock;

CheckResult timed(int id, std::string name, const std::function<bool(std::ostream&)>& body) {
  CheckResult r;
  r.id = id;
  r.name = std::move(name);
  std::ostringstream detail;
  const auto start = Clock::now();
  try {
    r.passed = body(detail);
  } catch (const std::exception& ex) {
    r.passed = false;
    detail << "exception: " << ex.what();
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  r.detail = detail.str();
  return r;
}

std::vector<std::vector<std::size_t>> all_subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> comb(k);
  for (std::size_t t = 0; t < k; ++t) comb[t] = t;
  while (true) {
    out.push_back(comb);
    std::size_t t = k;
    while (t > 0 && comb[t - 1] == n - k + t - 1) --t;
    if (t == 0) break;
    ++comb[t - 1];
    for (std::size_t u = t; u < k; ++u) comb[u] = comb[u - 1] + 1;
  }
  return out;
}

// Battery shared by criteria 5 and 6: 25 matrices of each class, n = 10.
struct ClassMatrix {
  std::string family;
  std::uint64_t seed;
  Matrix a;
  MatrixClass cls;
};

std::vector<ClassMatrix> class_battery() {
  std::vector<ClassMatrix> out;
  for (const char* family : {"random_general", "random_spsd", "random_dd", "random_doubly_dd"}) {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
      Matrix a = generate({family, 10, kKahanDefaultTheta, seed});
      MatrixClass cls = classify(a);
      out.push_back({family, seed, std::move(a), cls});
    }
  }
  return out;
}

bool principal_battery(const char* family, std::ostream& detail) {
  std::size_t failures = 0;
  std::size_t checks = 0;
  double worst = std::numeric_limits<double>::infinity();
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const std::size_t n = 4 + seed % 4;
    const Matrix a = generate({family, n, kKahanDefaultTheta, seed});
    for (std::size_t k = 1; k <= 3; ++k) {
      const PrincipalCheck check = check_principal_optimality(a, k, kVolumeRelTol);
      ++checks;
      if (!check.holds) ++failures;
      if (check.overall.volume > 0.0) {
        worst = std::min(worst, check.principal.volume / check.overall.volume);
      }
    }
  }
  detail << checks << " checks, " << failures << " failures, min principal/overall = " << worst;
  return failures == 0;
}

}  // namespace

double loglog_slope(const std::vector<double>& sizes, const std::vector<double>& values) {
  if (sizes.size() != values.size() || sizes.size() < 2) {
    throw DimensionError("loglog_slope: need at least two matching samples");
  }
  const double n = static_cast<double>(sizes.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    const double x = std::log(sizes[k]);
    const double y = std::log(values[k]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

TightnessSweep tightness_sweep(std::string_view family, const std::vector<std::size_t>& sizes) {
  TightnessSweep sweep;
  sweep.family = std::string(family);
  std::vector<double> ns, l_inv, u_inv, r_m;
  for (std::size_t n : sizes) {
    const Matrix a = generate({sweep.family, n});
    const CrossResult result = cross_approximate(a, n - 1, PivotStrategy::full);
    const LduDiagnostics d = ldu_diagnostics(a, result);
    sweep.rows.push_back({n, d.norm_l_inv, d.norm_u_inv, d.norm_d_inv, d.last_pivot, d.r_m,
                          d.interchanges_performed});
    ns.push_back(static_cast<double>(n));
    l_inv.push_back(d.norm_l_inv);
    u_inv.push_back(d.norm_u_inv);
    r_m.push_back(d.r_m);
  }
  if (sizes.size() >= 2) {
    sweep.slope_l_inv = loglog_slope(ns, l_inv);
    sweep.slope_u_inv = loglog_slope(ns, u_inv);
    sweep.slope_r_m = loglog_slope(ns, r_m);
  }
  return sweep;
}

CheckResult spsd_principal_optimality() {
  return timed(1, "SPSD maximum volume is principal", [](std::ostream& detail) {
    const auto start = Clock::now();
    const bool ok = principal_battery("random_spsd", detail);
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    detail << ", " << secs << " s (limit 30 s)";
    return ok && secs < 30.0;
  });
}

CheckResult dd_principal_optimality() {
  return timed(2, "DD maximum volume is principal; indefinite counterexample",
               [](std::ostream& detail) {
                 bool ok = principal_battery("random_dd", detail);
                 // [[0, I], [I, 0]] has a zero diagonal, so every principal
                 // submatrix of odd order has a zero row.
                 for (std::size_t k = 1; k <= 3; ++k) {
                   const Matrix a = gallery::offdiag_identity(k);
                   for (std::size_t size = 1; size <= k; size += 2) {
                     const PrincipalCheck check = check_principal_optimality(a, size);
                     const bool exact = !check.holds && check.principal.volume == 0.0 &&
                                        check.overall.volume == 1.0;
                     detail << "; offdiag_identity(" << k << ") size " << size << ": overall "
                            << check.overall.volume << ", principal " << check.principal.volume;
                     ok = ok && exact;
                   }
                 }
                 return ok;
               });
}

CheckResult triangular_dd_volumes() {
  return timed(3, "strictly DD unit upper triangular: off-principal volumes smaller",
               [](std::ostream& detail) {
                 std::size_t violations = 0;
                 std::size_t pairs = 0;
                 double margin = std::numeric_limits<double>::infinity();
                 for (std::uint64_t seed = 1; seed <= 50; ++seed) {
                   const std::size_t n = 2 + seed % 5;
                   const Matrix t = gallery::random_dd_unit_upper(n, seed);
                   for (std::size_t k = 1; k <= n; ++k) {
                     const auto subsets = all_subsets(n, k);
                     for (const auto& rows : subsets) {
                       const IndexSet i_set(rows);
                       const double principal = volume(t, i_set, i_set);
                       for (const auto& cols : subsets) {
                         if (cols == rows) continue;
                         ++pairs;
                         const double off = volume(t, i_set, IndexSet(cols));
                         margin = std::min(margin, principal - off);
                         if (!(off < principal)) ++violations;
                       }
                     }
                   }
                 }
                 detail << pairs << " pairs I != J, " << violations
                        << " violations, min margin " << margin;
                 return violations == 0 && margin > 0.0;
               });
}

CheckResult gram_column_correspondence() {
  return timed(4, "column selection and Gram principal volumes agree", [](std::ostream& detail) {
    std::size_t value_mismatch = 0;
    std::size_t argmax_mismatch = 0;
    double worst_rel = 0.0;
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
      const Matrix b = gallery::random_general(6, 1000 + seed);
      const Matrix gram = b.transpose() * b;
      for (std::size_t k = 1; k <= 3; ++k) {
        const auto subsets = all_subsets(6, k);
        std::vector<double> col_vols, gram_vols;
        for (const auto& s : subsets) {
          const IndexSet i_set(s);
          const double cv = column_volume(b, i_set);
          const double gv = volume(gram, i_set, i_set);
          const double rel = std::abs(cv * cv - gv) / std::max(cv * cv, gv);
          worst_rel = std::max(worst_rel, rel);
          if (rel > 1e-9) ++value_mismatch;
          col_vols.push_back(cv * cv);
          gram_vols.push_back(gv);
        }
        auto tie_set = [](const std::vector<double>& v) {
          const double best = *std::max_element(v.begin(), v.end());
          std::vector<std::size_t> ties;
          for (std::size_t q = 0; q < v.size(); ++q)
            if (v[q] >= best * (1.0 - kVolumeRelTol)) ties.push_back(q);
          return ties;
        };
        const auto col_ties = tie_set(col_vols);
        const auto gram_ties = tie_set(gram_vols);
        const VolumeResult maxvol = brute_force_maxvol(gram, k, true);
        const bool maxvol_in_ties =
            std::find(subsets.begin(), subsets.end(),
                      std::vector<std::size_t>(maxvol.row_set.begin(), maxvol.row_set.end())) -
                subsets.begin() == static_cast<std::ptrdiff_t>(col_ties.front());
        if (col_ties != gram_ties || !maxvol_in_ties) ++argmax_mismatch;
      }
    }
    detail << "worst relative |cv^2 - vol| = " << worst_rel << ", value mismatches "
           << value_mismatch << ", maximizer mismatches " << argmax_mismatch;
    return value_mismatch == 0 && argmax_mismatch == 0;
  });
}

CheckResult min_pivot_chain() {
  return timed(5, "min pivot <= F(class, m) sigma_{m+1}", [](std::ostream& detail) {
    std::size_t violations = 0;
    std::size_t checks = 0;
    double worst = 0.0;
    for (const ClassMatrix& cm : class_battery()) {
      for (std::size_t m = 1; m <= 8; ++m) {
        const CrossResult result = cross_approximate(cm.a, m, PivotStrategy::full);
        const MinPivotReport r = min_pivot_check(cm.a, result, cm.cls);
        ++checks;
        if (!r.holds) ++violations;
        worst = std::max(worst, r.min_pivot / r.rhs);
      }
    }
    detail << checks << " checks, " << violations << " violations, max min_pivot/rhs = " << worst;
    return violations == 0;
  });
}

CheckResult error_bounds() {
  return timed(6, "skeleton error within class bounds; SPSD pivots non-increasing",
               [](std::ostream& detail) {
                 std::size_t violations = 0;
                 std::size_t checks = 0;
                 std::size_t monotonicity = 0;
                 std::size_t cross_check = 0;
                 std::map<std::string, double> worst;
                 for (const ClassMatrix& cm : class_battery()) {
                   for (std::size_t m = 1; m <= 8; ++m) {
                     const BoundReport rep = bound_report(cm.a, m);
                     std::vector<std::string> kinds = {"general"};
                     if (cm.cls.is_spsd) kinds.push_back("spsd");
                     if (cm.cls.is_dd) kinds.push_back("dd");
                     if (cm.cls.is_doubly_dd) kinds.push_back("doubly_dd");
                     for (const auto& kind : kinds) {
                       ++checks;
                       const double ratio = rep.ratios.at(kind);
                       worst[kind] = std::max(worst[kind], ratio);
                       if (!(ratio <= 1.0 + kBoundRelTol)) ++violations;
                     }
                     if (std::abs(rep.achieved_error - rep.residual_max) >
                         1e-9 * max_norm(cm.a)) {
                       ++cross_check;
                     }
                     if (cm.cls.is_spsd) {
                       for (std::size_t k = 1; k < rep.pivots.size(); ++k) {
                         if (std::abs(rep.pivots[k].value) >
                             std::abs(rep.pivots[k - 1].value) +
                                 1e-12 * std::abs(rep.pivots[0].value)) {
                           ++monotonicity;
                         }
                       }
                     }
                   }
                 }
                 detail << checks << " bound checks, " << violations << " violations";
                 for (const auto& [kind, w] : worst) detail << ", max " << kind << " ratio " << w;
                 detail << "; SPSD pivot increases " << monotonicity
                        << "; skeleton/residual mismatches " << cross_check;
                 return violations == 0 && monotonicity == 0 && cross_check == 0;
               });
}

CheckResult mixed_bound_full_sweep() {
  return timed(7, "|p_n| <= 2^(2(n-1)+1) rho gamma_{n-1} at m = n-1", [](std::ostream& detail) {
    std::size_t violations = 0;
    double worst = 0.0;
    double worst_l_inv = 0.0;
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
      const std::size_t n = 4 + seed % 5;
      const Matrix a = gallery::random_general(n, 500 + seed);
      const CrossResult result = cross_approximate(a, n - 1, PivotStrategy::full);
      const double p_n = std::abs(result.lookahead.value().value);
      const double gamma = gamma_last(a);
      const double rhs = rhs_bound(BoundKind::mixed, n - 1, 0.0, wilkinson_bound(n - 1), gamma);
      worst = std::max(worst, p_n / rhs);
      if (!(p_n <= rhs * (1.0 + kBoundRelTol))) ++violations;
      // Inductive claim on the lower factor, checked empirically.
      const PivotFactors f = pivot_factors(result);
      double min_pivot = std::numeric_limits<double>::infinity();
      for (double p : result.pivot_values_with_lookahead()) min_pivot = std::min(min_pivot, std::abs(p));
      const double l_inv = inf_to_one_norm(triangular_inverse(f.l11, true)) * min_pivot /
                           (std::ldexp(1.0, static_cast<int>(n)) - 1.0);
      worst_l_inv = std::max(worst_l_inv, l_inv);
    }
    detail << "30 matrices, " << violations << " violations, max |p_n|/rhs = " << worst
           << "; max |L11^-1|_(inf->1) min|p| / (2^(m+1)-1) = " << worst_l_inv;
    return violations == 0;
  });
}

CheckResult tightness_sweeps() {
  return timed(8, "LDU growth sweeps (quad_growth, bidiagonal)", [](std::ostream& detail) {
    std::vector<std::size_t> sizes;
    for (std::size_t n = 8; n <= 48; n += 4) sizes.push_back(n);
    const TightnessSweep quad = tightness_sweep("quad_growth", sizes);
    bool interchanges = false;
    double worst_pivot = 0.0;
    for (const TightnessRow& row : quad.rows) {
      interchanges = interchanges || row.interchanges;
      worst_pivot = std::max(worst_pivot, std::abs(std::abs(row.last_pivot) - 0.5));
    }
    // 1/2 up to rounding in the Schur updates.
    bool ok = !interchanges && worst_pivot <= 1e-13;
    auto within = [](double v, double lo, double hi) { return v >= lo && v <= hi; };
    ok = ok && within(quad.slope_l_inv, 1.2, 1.8) && within(quad.slope_u_inv, 0.7, 1.3) &&
         within(quad.slope_r_m, 1.7, 2.3);
    const TightnessSweep bid = tightness_sweep("bidiagonal", sizes);
    bool bidiagonal_factors = true;
    for (std::size_t n : {8UL, 16UL}) {
      const Matrix b = gallery::bidiagonal(n);
      const LduDiagnostics d = ldu_diagnostics(b, cross_approximate(b, n - 1, PivotStrategy::full));
      bidiagonal_factors = bidiagonal_factors && d.l == b && d.d == Matrix::identity(n) &&
                           d.u == Matrix::identity(n);
    }
    ok = ok && within(bid.slope_r_m, 0.7, 1.3) && bidiagonal_factors;
    detail << "quad_growth: interchanges " << (interchanges ? "yes" : "none") << ", max ||p_n|-1/2| "
           << worst_pivot << ", slopes L^-1 " << quad.slope_l_inv << " [1.2,1.8], U^-1 "
           << quad.slope_u_inv << " [0.7,1.3], r_m " << quad.slope_r_m
           << " [1.7,2.3]; bidiagonal: slope r_m " << bid.slope_r_m
           << " [0.7,1.3], L = B and D = U = I " << (bidiagonal_factors ? "yes" : "no");
    return ok;
  });
}

CheckResult no_pivoting_block() {
  return timed(9, "diag(I_m, B_m) selects I_m; det(B_m)^(1/m) growth", [](std::ostream& detail) {
    bool ok = true;
    double worst_det = 0.0;
    for (std::size_t m = 4; m <= 10; ++m) {
      const Matrix a = gallery::block_remark(m);
      const CrossResult result = cross_approximate(a, m, PivotStrategy::full);
      for (std::size_t k = 0; k < m; ++k) {
        const Pivot& p = result.pivots.at(k);
        if (p.row != k || p.col != k || p.value != 1.0) ok = false;
      }
      const double direct = determinant(gallery::tridiag_bm(m));
      const double oracle = gallery::tridiag_bm_determinant(m);
      worst_det = std::max(worst_det, std::abs(direct - oracle) / oracle);
    }
    const double rate = std::pow(gallery::tridiag_bm_determinant(10), 0.1);
    const double limit = (1.0 + std::numbers::sqrt2) / 2.0;
    ok = ok && worst_det <= 1e-12 && std::abs(rate - limit) <= 0.02;
    detail << "pivots (k,k) = 1 for m = 4..10: " << (ok ? "yes" : "see failure")
           << ", max rel |det - recurrence| " << worst_det << ", det(B_10)^(1/10) = " << rate
           << " vs " << limit;
    return ok;
  });
}

CheckResult function_cross_checks() {
  return timed(10, "function cross approximation: consistency and bounds", [](std::ostream& detail) {
    const Grid grid = Grid::chebyshev(65);
    bool consistent = true;
    for (const auto& name : test_function_names()) {
      const TestFunction fn = test_function(name);
      const FunctionCrossResult fc = function_cross(fn.f, 8, grid);
      const CrossResult cr = cross_approximate(sample(fn.f, grid), 8, PivotStrategy::full);
      bool same = fc.steps_completed == cr.steps_completed;
      for (std::size_t k = 0; same && k < fc.steps_completed; ++k) {
        same = fc.points[k].x_index == cr.pivots[k].row &&
               fc.points[k].y_index == cr.pivots[k].col &&
               fc.pivot_values[k] == cr.pivots[k].value;
      }
      if (!same) consistent = false;
      detail << name << " " << (same ? "identical" : "DIFFERENT") << " (" << fc.steps_completed
             << " steps); ";
    }

    const TestFunction runge = test_function("runge2d", 4.0);
    const double sup = ellipse_sup(runge, 5.0, 512, grid.y);
    bool runge_ok = true;
    double runge_worst = 0.0;
    for (std::size_t m = 1; m <= 8; ++m) {
      const double err = function_cross(runge.f, m, grid).error_max;
      const double bound = function_bound(2.0 * sup, 5.0, wilkinson_bound(m), m);
      runge_worst = std::max(runge_worst, err / bound);
      if (!(err <= bound)) runge_ok = false;
    }
    detail << "runge2d r=5: sampled M " << sup << ", max err/bound " << runge_worst << "; ";

    const TestFunction gauss = test_function("gauss");
    const FunctionCrossResult g6 = function_cross(gauss.f, 6, grid);
    bool monotone = true;
    for (std::size_t k = 1; k < g6.pivot_values.size(); ++k) {
      if (std::abs(g6.pivot_values[k]) > std::abs(g6.pivot_values[k - 1])) monotone = false;
    }
    bool gauss_ok = true;
    double gauss_worst = 0.0;
    for (double r : {2.0, 4.5, 6.0, 8.0}) {
      const double m_sup = ellipse_sup(gauss, r, 512, grid.y);
      for (std::size_t m = 1; m <= 6; ++m) {
        const double err = function_cross(gauss.f, m, grid).error_max;
        const double bound = function_bound(2.0 * m_sup, r, 1.0, m);
        gauss_worst = std::max(gauss_worst, err / bound);
        if (!(err <= bound)) gauss_ok = false;
      }
    }
    detail << "gauss: pivots non-increasing " << (monotone ? "yes" : "no")
           << ", max err/bound (rho=1) " << gauss_worst;
    return consistent && runge_ok && monotone && gauss_ok;
  });
}

CheckResult determinism() {
  return timed(11, "seeded outputs are byte-identical", [](std::ostream& detail) {
    auto render = [] {
      std::ostringstream out;
      write_matrix(out, generate({"random_spsd", 9, kKahanDefaultTheta, 7}));
      write_matrix(out, generate({"random_doubly_dd", 9, kKahanDefaultTheta, 7}));
      out << to_json(bound_report(generate({"random_spsd", 10, kKahanDefaultTheta, 7}), 4));
      const TestFunction fn = test_function("gauss");
      write_csv(out, function_cross(fn.f, 5, Grid::chebyshev(33)).residual_grid);
      out << to_json(brute_force_maxvol(generate({"random_general", 7, kKahanDefaultTheta, 3}), 3,
                                        false));
      return out.str();
    };
    const char* saved = std::getenv("CROSSVOL_THREADS");
    const std::string saved_value = saved ? saved : "";
    ::setenv("CROSSVOL_THREADS", "1", 1);
    const std::string serial = render();
    ::setenv("CROSSVOL_THREADS", "4", 1);
    const std::string threaded = render();
    const std::string again = render();
    if (saved) {
      ::setenv("CROSSVOL_THREADS", saved_value.c_str(), 1);
    } else {
      ::unsetenv("CROSSVOL_THREADS");
    }
    const bool ok = serial == threaded && threaded == again;
    detail << serial.size() << " bytes compared across 1 and 4 threads: "
           << (ok ? "identical" : "DIFFERENT");
    return ok;
  });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"theorems2", "bounds3", "funcross", "tightness",
                                                 "all"};
  return names;
}

std::vector<CheckResult> run_suite(std::string_view suite) {
  if (suite == "theorems2") {
    return {spsd_principal_optimality(), dd_principal_optimality(), triangular_dd_volumes(),
            gram_column_correspondence()};
  }
  if (suite == "bounds3") {
    return {min_pivot_chain(), error_bounds(), mixed_bound_full_sweep(), no_pivoting_block()};
  }
  if (suite == "funcross") return {function_cross_checks()};
  if (suite == "tightness") return {tightness_sweeps()};
  if (suite == "all") {
    return {spsd_principal_optimality(), dd_principal_optimality(), triangular_dd_volumes(),
            gram_column_correspondence(), min_pivot_chain(), error_bounds(),
            mixed_bound_full_sweep(), tightness_sweeps(), no_pivoting_block(),
            function_cross_checks(), determinism()};
  }
  throw UsageError("unknown verification suite '" + std::string(suite) +
                   "' (expected theorems2|bounds3|funcross|tightness|all)");
}

}  // namespace crossvol::verify
