#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "crossvol/cross.hpp"
#include "crossvol/matrix.hpp"

namespace crossvol {

using BivariateFunction = std::function<double(double, double)>;
/// Extension of f(., y) to complex first argument.
using ComplexExtension = std::function<std::complex<double>(std::complex<double>, double)>;

/// Tensor grid on [-1, 1]^2.
struct Grid {
  std::vector<double> x;
  std::vector<double> y;

  /// G Chebyshev points of the second kind, -cos(j pi / (G - 1)), in
  /// increasing order on both axes. G >= 2.
  static Grid chebyshev(std::size_t g);
};

inline constexpr std::size_t kDefaultGridSize = 129;

/// f sampled on the grid: entry (i, j) is f(x_i, y_j).
Matrix sample(const BivariateFunction& f, const Grid& grid);

struct GridPoint {
  std::size_t x_index = 0;
  std::size_t y_index = 0;
  double x = 0.0;
  double y = 0.0;
};

struct FunctionCrossResult {
  std::vector<GridPoint> points;
  std::vector<double> pivot_values;  // e_{k-1}(x_k, y_k)
  Matrix residual_grid;              // e_m on the grid
  Matrix approximant_grid;           // f_m on the grid
  double error_max = 0.0;
  std::size_t steps_completed = 0;
  Termination termination = Termination::requested_rank;
};

struct FunctionCrossOptions {
  /// Early stop when max |e_k| <= breakdown_tol * max |f| on the grid.
  double breakdown_tol = kBreakdownTol;
};

/// Cross approximation of a bivariate function with the argmax restricted
/// to the grid. Ties go to the smallest (x-index, y-index). Throws
/// NumericalError when f vanishes on the grid.
FunctionCrossResult function_cross(const BivariateFunction& f, std::size_t m, const Grid& grid,
                                   const FunctionCrossOptions& options = {});

/// (m+1) x (m+1) matrix of f on (xs + {x}) x (ys + {y}). Throws
/// PreconditionError when xs + {x} or ys + {y} contain duplicates.
Matrix build_interpolation_matrix(const BivariateFunction& f, std::span<const double> xs,
                                  std::span<const double> ys, double x, double y);

/// Ellipse with foci -1, 1 and semi-axis sum r > 1.
class BernsteinEllipse {
 public:
  explicit BernsteinEllipse(double r);

  double r() const noexcept { return r_; }
  double semi_major() const noexcept { return 0.5 * (r_ + 1.0 / r_); }
  double semi_minor() const noexcept { return 0.5 * (r_ - 1.0 / r_); }

  /// (u + 1/u) / 2 with u = r e^{i theta}.
  std::complex<double> boundary_point(double theta) const;

  /// Radius of the ellipse through z (1 for points on [-1, 1]).
  static double radius_through(std::complex<double> z);

 private:
  double r_;
};

/// Sampled estimate of sup |f(eta, xi)| over eta on the ellipse boundary and
/// xi in y_grid, using n_theta equispaced boundary angles. This is a lower
/// estimate of the true supremum. Throws AnalyticityError when an
/// evaluation fails or is not finite.
double ellipse_sup(const ComplexExtension& f_ext, double r, std::size_t n_theta,
                   std::span<const double> y_grid);

struct TestFunction;

/// As above, after refusing radii at or beyond the function's analyticity
/// radius (AnalyticityError).
double ellipse_sup(const TestFunction& fn, double r, std::size_t n_theta,
                   std::span<const double> y_grid);

/// 2 M rho / (1 - 1/r) (r/4)^(-m). Throws ParameterError for r <= 1.
double function_bound(double sup_estimate, double r, double rho, std::size_t m);

/// The bound decays in m only for r > 4.
inline bool function_bound_decays(double r) { return r > 4.0; }

/// Named test functions.
struct TestFunction {
  std::string name;
  BivariateFunction f;
  ComplexExtension extension;
  /// Largest Bernstein radius r0 such that f(., y) is analytic inside E_{r0}
  /// for every y in [-1, 1]. Infinite for entire functions.
  double analytic_radius = std::numeric_limits<double>::infinity();
  bool spsd_kernel = false;
};

/// product (x y), gauss (exp(-(x - y)^2)), runge2d (1 / (x + y + c)),
/// expxy (exp(x y)). Throws UsageError for unknown names, ParameterError
/// for runge2d with c <= 2 (pole on the square).
TestFunction test_function(std::string_view name, double c = 4.0);

const std::vector<std::string>& test_function_names();

}  // namespace crossvol
