#include "crossvol/funcross.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "crossvol/errors.hpp"
#include "crossvol/linalg.hpp"

namespace crossvol {

Grid Grid::chebyshev(std::size_t g) {
  if (g < 2) throw ParameterError("chebyshev grid needs at least 2 points");
  Grid grid;
  grid.x.resize(g);
  // sin form of -cos(j pi / (g - 1)): exactly symmetric about 0.
  const double denom = 2.0 * static_cast<double>(g - 1);
  for (std::size_t j = 0; j < g; ++j) {
    const double num = 2.0 * static_cast<double>(j) - static_cast<double>(g - 1);
    grid.x[j] = std::sin(std::numbers::pi * num / denom);
  }
  grid.y = grid.x;
  return grid;
}

Matrix sample(const BivariateFunction& f, const Grid& grid) {
  std::vector<double> values(grid.x.size() * grid.y.size());
  std::size_t k = 0;
  for (double x : grid.x)
    for (double y : grid.y) values[k++] = f(x, y);
  return Matrix(grid.x.size(), grid.y.size(), std::move(values));
}

FunctionCrossResult function_cross(const BivariateFunction& f, std::size_t m, const Grid& grid,
                                   const FunctionCrossOptions& options) {
  if (m == 0) throw DimensionError("function_cross: m must be positive");
  if (grid.x.empty() || grid.y.empty()) throw DimensionError("function_cross: empty grid");

  const std::size_t gx = grid.x.size();
  const std::size_t gy = grid.y.size();
  FunctionCrossResult result;
  Matrix& e = result.residual_grid;
  e = sample(f, grid);
  result.approximant_grid = Matrix(gx, gy);
  Matrix& approx = result.approximant_grid;

  const double scale = max_norm(e);
  if (scale == 0.0) throw NumericalError("function_cross: f vanishes on the grid");
  const double threshold = options.breakdown_tol * scale;

  std::vector<bool> x_used(gx, false);
  std::vector<bool> y_used(gy, false);
  std::vector<double> along_y(gy);  // e_k(x_{k+1}, .)
  std::vector<double> along_x(gx);  // e_k(., y_{k+1})

  const std::size_t steps = std::min({m, gx, gy});
  for (std::size_t step = 0; step < steps; ++step) {
    double best = -1.0;
    std::size_t bx = 0;
    std::size_t by = 0;
    for (std::size_t i = 0; i < gx; ++i) {
      if (x_used[i]) continue;
      for (std::size_t j = 0; j < gy; ++j) {
        if (y_used[j]) continue;
        if (std::abs(e(i, j)) > best) {
          best = std::abs(e(i, j));
          bx = i;
          by = j;
        }
      }
    }
    if (best <= threshold) {
      if (result.points.empty()) {
        throw NumericalError("function_cross: f is numerically zero on the grid (max |f| = " +
                             std::to_string(scale) + ")");
      }
      result.termination = Termination::breakdown;
      break;
    }
    const double pivot = e(bx, by);
    for (std::size_t i = 0; i < gx; ++i) along_x[i] = e(i, by);
    for (std::size_t j = 0; j < gy; ++j) along_y[j] = e(bx, j);
    for (std::size_t i = 0; i < gx; ++i) {
      for (std::size_t j = 0; j < gy; ++j) {
        const double term = along_x[i] * along_y[j] / pivot;
        e(i, j) -= term;
        approx(i, j) += term;
      }
    }
    for (std::size_t j = 0; j < gy; ++j) e(bx, j) = 0.0;
    for (std::size_t i = 0; i < gx; ++i) e(i, by) = 0.0;
    x_used[bx] = true;
    y_used[by] = true;
    result.points.push_back({bx, by, grid.x[bx], grid.y[by]});
    result.pivot_values.push_back(pivot);
  }
  result.steps_completed = result.points.size();
  result.error_max = max_norm(e);
  return result;
}

Matrix build_interpolation_matrix(const BivariateFunction& f, std::span<const double> xs,
                                  std::span<const double> ys, double x, double y) {
  if (xs.size() != ys.size()) {
    throw DimensionError("build_interpolation_matrix: xs and ys differ in length");
  }
  std::vector<double> rows(xs.begin(), xs.end());
  std::vector<double> cols(ys.begin(), ys.end());
  rows.push_back(x);
  cols.push_back(y);
  auto require_distinct = [](std::vector<double> v, const char* axis) {
    std::sort(v.begin(), v.end());
    if (std::adjacent_find(v.begin(), v.end()) != v.end()) {
      throw PreconditionError(std::string("build_interpolation_matrix: duplicate ") + axis +
                              " point");
    }
  };
  require_distinct(rows, "x");
  require_distinct(cols, "y");
  const std::size_t n = rows.size();
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = f(rows[i], cols[j]);
  return a;
}

BernsteinEllipse::BernsteinEllipse(double r) : r_(r) {
  if (!(r > 1.0)) throw ParameterError("Bernstein ellipse radius must exceed 1");
}

std::complex<double> BernsteinEllipse::boundary_point(double theta) const {
  const std::complex<double> u = std::polar(r_, theta);
  return 0.5 * (u + 1.0 / u);
}

double BernsteinEllipse::radius_through(std::complex<double> z) {
  const std::complex<double> w = z + std::sqrt(z - 1.0) * std::sqrt(z + 1.0);
  const double a = std::abs(w);
  return std::max(a, 1.0 / a);
}

double ellipse_sup(const ComplexExtension& f_ext, double r, std::size_t n_theta,
                   std::span<const double> y_grid) {
  const BernsteinEllipse ellipse(r);
  if (n_theta == 0 || y_grid.empty()) throw ParameterError("ellipse_sup: empty sample set");
  double sup = 0.0;
  for (std::size_t t = 0; t < n_theta; ++t) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(n_theta);
    const std::complex<double> eta = ellipse.boundary_point(theta);
    for (double xi : y_grid) {
      std::complex<double> v;
      try {
        v = f_ext(eta, xi);
      } catch (const std::exception& ex) {
        throw AnalyticityError(std::string("ellipse_sup: evaluation failed: ") + ex.what());
      }
      const double mag = std::abs(v);
      if (!std::isfinite(mag)) {
        throw AnalyticityError("ellipse_sup: non-finite value on the ellipse boundary");
      }
      sup = std::max(sup, mag);
    }
  }
  return sup;
}

double ellipse_sup(const TestFunction& fn, double r, std::size_t n_theta,
                   std::span<const double> y_grid) {
  if (r >= fn.analytic_radius) {
    throw AnalyticityError("ellipse_sup: " + fn.name + " is not analytic inside E_r for r = " +
                           std::to_string(r) + " (radius " +
                           std::to_string(fn.analytic_radius) + ")");
  }
  return ellipse_sup(fn.extension, r, n_theta, y_grid);
}

double function_bound(double sup_estimate, double r, double rho, std::size_t m) {
  if (!(r > 1.0)) throw ParameterError("function_bound: r must exceed 1");
  if (!(sup_estimate >= 0.0)) throw ParameterError("function_bound: M must be nonnegative");
  if (!(rho >= 1.0)) throw ParameterError("function_bound: rho must be at least 1");
  return 2.0 * sup_estimate * rho / (1.0 - 1.0 / r) *
         std::pow(r / 4.0, -static_cast<double>(m));
}

const std::vector<std::string>& test_function_names() {
  static const std::vector<std::string> names = {"product", "gauss", "runge2d", "expxy"};
  return names;
}

TestFunction test_function(std::string_view name, double c) {
  // All four are positive semidefinite kernels on a symmetric grid:
  // xy is rank one, exp(xy) and exp(-(x-y)^2) are classical PSD kernels,
  // and 1/(x+y+c) is the Laplace transform of exp(-t(x+y+c)).
  TestFunction fn;
  fn.name = std::string(name);
  fn.spsd_kernel = true;
  if (name == "product") {
    fn.f = [](double x, double y) { return x * y; };
    fn.extension = [](std::complex<double> eta, double xi) { return eta * xi; };
  } else if (name == "gauss") {
    fn.f = [](double x, double y) { return std::exp(-(x - y) * (x - y)); };
    fn.extension = [](std::complex<double> eta, double xi) {
      return std::exp(-(eta - xi) * (eta - xi));
    };
  } else if (name == "runge2d") {
    if (!(c > 2.0)) throw ParameterError("runge2d: c must exceed 2 (pole on the square)");
    fn.f = [c](double x, double y) { return 1.0 / (x + y + c); };
    fn.extension = [c](std::complex<double> eta, double xi) {
      const std::complex<double> d = eta + xi + c;
      if (d == 0.0) throw AnalyticityError("runge2d: evaluation at the pole");
      return 1.0 / d;
    };
    // Nearest pole over xi in [-1, 1] is eta = -(c - 1).
    const double t = c - 1.0;
    fn.analytic_radius = t + std::sqrt(t * t - 1.0);
  } else if (name == "expxy") {
    fn.f = [](double x, double y) { return std::exp(x * y); };
    fn.extension = [](std::complex<double> eta, double xi) { return std::exp(eta * xi); };
  } else {
    throw UsageError("unknown test function '" + std::string(name) + "'");
  }
  return fn;
}

}  // namespace crossvol
