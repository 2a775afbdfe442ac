#include <doctest.h>

#include <cmath>
#include <complex>

#include "crossvol/bounds.hpp"
#include "crossvol/cross.hpp"
#include "crossvol/errors.hpp"
#include "crossvol/funcross.hpp"
#include "crossvol/linalg.hpp"

using namespace crossvol;

TEST_CASE("Chebyshev grid") {
  const Grid g = Grid::chebyshev(5);
  REQUIRE(g.x.size() == 5);
  CHECK(g.x.front() == -1.0);
  CHECK(g.x.back() == 1.0);
  CHECK(g.x[2] == 0.0);
  CHECK(g.x[1] == -g.x[3]);
  CHECK(g.x[1] == doctest::Approx(-std::sqrt(0.5)));
  CHECK_THROWS_AS(Grid::chebyshev(1), ParameterError);
}

TEST_CASE("rank-one function is reproduced in one step") {
  const TestFunction fn = test_function("product");
  const FunctionCrossResult r = function_cross(fn.f, 1, Grid::chebyshev(33));
  CHECK(r.error_max < 1e-15);
  CHECK(std::abs(r.pivot_values[0]) == 1.0);
}

TEST_CASE("Gaussian kernel pivots are non-increasing") {
  const TestFunction fn = test_function("gauss");
  const FunctionCrossResult r = function_cross(fn.f, 6, Grid::chebyshev(65));
  REQUIRE(r.steps_completed == 6);
  for (std::size_t k = 1; k < r.pivot_values.size(); ++k) {
    CHECK(std::abs(r.pivot_values[k]) <= std::abs(r.pivot_values[k - 1]));
  }
}

TEST_CASE("function pivots match the dense sample matrix") {
  const Grid grid = Grid::chebyshev(41);
  const TestFunction fn = test_function("runge2d", 4.0);
  const FunctionCrossResult fc = function_cross(fn.f, 8, grid);
  const CrossResult cr = cross_approximate(sample(fn.f, grid), 8, PivotStrategy::full);
  REQUIRE(fc.steps_completed == cr.steps_completed);
  for (std::size_t k = 0; k < fc.steps_completed; ++k) {
    CHECK(fc.points[k].x_index == cr.pivots[k].row);
    CHECK(fc.points[k].y_index == cr.pivots[k].col);
    CHECK(fc.pivot_values[k] == cr.pivots[k].value);
  }
  CHECK(fc.residual_grid == cr.residual);
  // Geometric decay.
  double prev = std::abs(fc.pivot_values[0]);
  for (std::size_t k = 1; k < 8; ++k) {
    CHECK(std::abs(fc.pivot_values[k]) < 0.5 * prev);
    prev = std::abs(fc.pivot_values[k]);
  }
}

TEST_CASE("zero function is rejected") {
  const BivariateFunction zero = [](double, double) { return 0.0; };
  CHECK_THROWS_AS(function_cross(zero, 1, Grid::chebyshev(5)), NumericalError);
  const TestFunction fn = test_function("gauss");
  CHECK_THROWS_AS(function_cross(fn.f, 1, Grid::chebyshev(5), {2.0}), NumericalError);
}

TEST_CASE("interpolation matrix") {
  const BivariateFunction f = [](double x, double y) { return x * y; };
  const Matrix m0 = build_interpolation_matrix(f, {}, {}, 0.5, -2.0);
  CHECK(m0 == Matrix::from_rows({{-1.0}}));
  const std::vector<double> xs = {0.1, 0.7};
  const std::vector<double> ys = {-0.3, 0.4};
  const Matrix m2 = build_interpolation_matrix(f, xs, ys, 0.9, 0.2);
  CHECK(m2.rows() == 3);
  CHECK(singular_values(m2)[1] < 1e-15);
  const std::vector<double> dup = {0.1, 0.9};
  CHECK_THROWS_AS(build_interpolation_matrix(f, dup, ys, 0.9, 0.2), PreconditionError);
}

TEST_CASE("interpolation matrix pivots agree with function cross") {
  const TestFunction fn = test_function("gauss");
  const FunctionCrossResult r = function_cross(fn.f, 3, Grid::chebyshev(65));
  const std::vector<double> xs = {r.points[0].x, r.points[1].x};
  const std::vector<double> ys = {r.points[0].y, r.points[1].y};
  const Matrix m = build_interpolation_matrix(fn.f, xs, ys, r.points[2].x, r.points[2].y);
  const CrossResult cr = cross_approximate(m, 3, PivotStrategy::full);
  for (std::size_t k = 0; k < 3; ++k) {
    CHECK(cr.pivots[k].value == doctest::Approx(r.pivot_values[k]).epsilon(1e-10));
  }
}

TEST_CASE("Bernstein ellipse geometry") {
  const BernsteinEllipse e(5.0);
  CHECK(e.semi_major() + e.semi_minor() == doctest::Approx(5.0));
  const std::complex<double> z0 = e.boundary_point(0.0);
  CHECK(z0.real() == doctest::Approx(2.6));
  CHECK(z0.imag() == 0.0);
  CHECK(BernsteinEllipse::radius_through(e.boundary_point(1.1)) == doctest::Approx(5.0));
  CHECK(BernsteinEllipse::radius_through({0.3, 0.0}) == doctest::Approx(1.0));
  CHECK_THROWS_AS(BernsteinEllipse(1.0), ParameterError);
}

TEST_CASE("ellipse supremum") {
  const ComplexExtension one = [](std::complex<double>, double) {
    return std::complex<double>(1.0, 0.0);
  };
  const std::vector<double> ys = {-1.0, 0.0, 1.0};
  CHECK(ellipse_sup(one, 3.0, 64, ys) == 1.0);
  const TestFunction runge = test_function("runge2d", 4.0);
  // Nearest point: eta = -(r + 1/r)/2 = -2.6 and y = -1, distance 0.4.
  CHECK(ellipse_sup(runge, 5.0, 512, ys) == doctest::Approx(2.5));
  CHECK_THROWS_AS(ellipse_sup(runge, 6.0, 64, ys), AnalyticityError);
  const ComplexExtension broken = [](std::complex<double> z, double) { return 1.0 / (z - z); };
  const std::vector<double> y0 = {0.0};
  CHECK_THROWS_AS(ellipse_sup(broken, 2.0, 8, y0), AnalyticityError);
}

TEST_CASE("function bound arithmetic") {
  CHECK(function_bound(1.0, 5.0, 1.0, 2) == doctest::Approx(1.6));
  CHECK(function_bound(1.0, 5.0, 1.0, 0) == doctest::Approx(2.0 / 0.8));
  CHECK(function_bound(1.0, 4.0, 1.0, 7) == doctest::Approx(function_bound(1.0, 4.0, 1.0, 0)));
  CHECK_FALSE(function_bound_decays(4.0));
  CHECK(function_bound_decays(4.5));
  CHECK_THROWS_AS(function_bound(1.0, 1.0, 1.0, 1), ParameterError);
}

TEST_CASE("test function catalog") {
  CHECK(test_function_names().size() == 4);
  CHECK_THROWS_AS(test_function("sinc"), UsageError);
  CHECK_THROWS_AS(test_function("runge2d", 2.0), ParameterError);
  const TestFunction r = test_function("runge2d", 4.0);
  CHECK(r.analytic_radius == doctest::Approx(3.0 + std::sqrt(8.0)));
  CHECK(r.f(0.5, 0.5) == doctest::Approx(0.2));
}
