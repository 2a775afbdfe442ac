#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace crossvol::verify {

/// One check of a verification battery.
struct CheckResult {
  int id = 0;  // criterion number
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

// Batteries, one per criterion. Each is deterministic (fixed seeds).

CheckResult spsd_principal_optimality();      // 1
CheckResult dd_principal_optimality();        // 2
CheckResult triangular_dd_volumes();          // 3
CheckResult gram_column_correspondence();     // 4
CheckResult min_pivot_chain();                // 5
CheckResult error_bounds();                   // 6
CheckResult mixed_bound_full_sweep();         // 7
CheckResult tightness_sweeps();               // 8
CheckResult no_pivoting_block();              // 9
CheckResult function_cross_checks();          // 10
CheckResult determinism();                    // 11

/// Suite names: theorems2, bounds3, funcross, tightness, all.
const std::vector<std::string>& suite_names();

/// Runs a suite; throws UsageError for unknown names.
std::vector<CheckResult> run_suite(std::string_view suite);

/// Ordinary least-squares slope of log(values) against log(sizes).
double loglog_slope(const std::vector<double>& sizes, const std::vector<double>& values);

struct TightnessRow {
  std::size_t n = 0;
  double norm_l_inv = 0.0;
  double norm_u_inv = 0.0;
  double norm_d_inv = 0.0;
  double last_pivot = 0.0;
  double r_m = 0.0;
  bool interchanges = false;
};

struct TightnessSweep {
  std::string family;
  std::vector<TightnessRow> rows;
  double slope_l_inv = 0.0;
  double slope_u_inv = 0.0;
  double slope_r_m = 0.0;
};

/// Complete-pivoting LDU sweep of a gallery family over the given sizes.
TightnessSweep tightness_sweep(std::string_view family, const std::vector<std::size_t>& sizes);

}  // namespace crossvol::verify
