#include <doctest.h>

#include <cmath>
#include <numbers>

#include "crossvol/classify.hpp"
#include "crossvol/cross.hpp"
#include "crossvol/errors.hpp"
#include "crossvol/gallery.hpp"
#include "crossvol/linalg.hpp"

using namespace crossvol;

TEST_CASE("one Schur step on the second difference matrix") {
  const Matrix a = Matrix::from_rows({{2, -1}, {-1, 2}});
  const CrossResult r = cross_approximate(a, 1, PivotStrategy::full);
  REQUIRE(r.pivots.size() == 1);
  CHECK(r.pivots[0] == Pivot{0, 0, 2.0});
  CHECK(r.residual == Matrix::from_rows({{0, 0}, {0, 1.5}}));
  CHECK(r.residual_max == 1.5);
  REQUIRE(r.lookahead.has_value());
  CHECK(r.lookahead->value == 1.5);
  CHECK(skeleton_error(a, r) == doctest::Approx(1.5));
  CHECK(r.termination == Termination::requested_rank);
}

TEST_CASE("rank-one input breaks down after one step") {
  const Matrix ones(3, 3, 1.0);
  const CrossResult one = cross_approximate(ones, 1, PivotStrategy::full);
  CHECK(one.residual_max == 0.0);
  CHECK(skeleton_error(ones, one) < 1e-15);
  const CrossResult two = cross_approximate(ones, 2, PivotStrategy::full);
  CHECK(two.steps_completed == 1);
  CHECK(two.termination == Termination::breakdown);
  REQUIRE(two.lookahead.has_value());
  CHECK(two.lookahead->value == 0.0);
  const CrossResult full = cross_approximate(Matrix::identity(3), 3, PivotStrategy::full);
  CHECK_FALSE(full.lookahead.has_value());
}

TEST_CASE("identity keeps the remaining diagonal entry") {
  const Matrix a = Matrix::identity(3);
  const CrossResult r = cross_approximate(a, 2, PivotStrategy::full);
  CHECK(skeleton_error(a, r) == 1.0);
  CHECK(r.pivots[0] == Pivot{0, 0, 1.0});
  CHECK(r.pivots[1] == Pivot{1, 1, 1.0});
}

TEST_CASE("block matrix with B_m needs no pivoting") {
  const CrossResult r = cross_approximate(gallery::block_remark(3), 3, PivotStrategy::full);
  REQUIRE(r.pivots.size() == 3);
  for (std::size_t k = 0; k < 3; ++k) CHECK(r.pivots[k] == Pivot{k, k, 1.0});
}

TEST_CASE("ties go to the lexicographically smallest position") {
  const Matrix a = Matrix::from_rows({{1, -1}, {-1, 1}});
  const CrossResult r = cross_approximate(a, 1, PivotStrategy::full);
  CHECK(r.pivots[0].row == 0);
  CHECK(r.pivots[0].col == 0);
  const Matrix b = Matrix::from_rows({{0, 2}, {-2, 0}});
  const CrossResult s = cross_approximate(b, 1, PivotStrategy::full);
  CHECK(s.pivots[0] == Pivot{0, 1, 2.0});
}

TEST_CASE("argument checks") {
  const Matrix a = Matrix::identity(3);
  CHECK_THROWS_AS(cross_approximate(a, 0, PivotStrategy::full), DimensionError);
  CHECK_THROWS_AS(cross_approximate(a, 4, PivotStrategy::full), DimensionError);
  CHECK_THROWS_AS(cross_approximate(Matrix::from_rows({{1, 2}, {2, 1}}), 1, PivotStrategy::diagonal),
                  PreconditionError);
  CHECK_THROWS_AS(parse_strategy("partial"), UsageError);
  CHECK(parse_strategy("diagonal") == PivotStrategy::diagonal);
}

TEST_CASE("pivot product equals the determinant of the selected block") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Matrix a = gallery::random_general(7, seed);
    const CrossResult r = cross_approximate(a, 4, PivotStrategy::full);
    double prod = 1.0;
    for (const Pivot& p : r.pivots) prod *= p.value;
    const Matrix block = a.submatrix(r.row_set.view(), r.col_set.view());
    CHECK(std::abs(prod) == doctest::Approx(std::abs(determinant(block))).epsilon(1e-10));
    CHECK(skeleton_error(a, r) == doctest::Approx(r.residual_max).epsilon(1e-9));
  }
}

TEST_CASE("factors reconstruct the approximation") {
  const Matrix a = gallery::random_general(6, 9);
  const CrossResult r = cross_approximate(a, 3, PivotStrategy::full);
  const Matrix approx = r.col_factors * r.row_factors;
  CHECK(max_norm(a - approx - r.residual) < 1e-13);
  CHECK(max_norm(skeleton(a, r) - approx) < 1e-12);
}

TEST_CASE("full sweep reproduces A exactly up to rounding") {
  const Matrix a = gallery::random_general(5, 3);
  const CrossResult r = cross_approximate(a, 5, PivotStrategy::full);
  CHECK(skeleton_error(a, r) < 1e-13);
  CHECK(r.residual_max == 0.0);
}

TEST_CASE("diagonal strategy follows complete pivoting on SPSD input") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Matrix a = gallery::random_spsd(8, seed);
    const CrossResult d = cross_approximate(a, 5, PivotStrategy::diagonal);
    for (const Pivot& p : d.pivots) CHECK(p.row == p.col);
    const CrossResult f = cross_approximate(a, 5, PivotStrategy::full);
    CHECK(d.row_set == f.row_set);
  }
}

TEST_CASE("realized growth") {
  const std::vector<double> ones = {1.0, 1.0, 1.0};
  CHECK(realized_growth(ones, Matrix::identity(3)).growth == 1.0);
  const std::vector<double> with_zero = {1.0, 0.0};
  CHECK_THROWS_AS(realized_growth(with_zero, Matrix::identity(2)), NumericalError);
  const std::vector<double> wrong_first = {0.5, 0.5};
  CHECK_THROWS_AS(realized_growth(wrong_first, Matrix::identity(2)), PreconditionError);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Matrix s = gallery::random_spsd(8, seed);
    const auto ps = cross_approximate(s, 6, PivotStrategy::full).pivot_values_with_lookahead();
    CHECK(realized_growth(ps, s).growth <= 1.0 + 1e-12);
    const Matrix d = gallery::random_dd(8, seed);
    const auto pd = cross_approximate(d, 6, PivotStrategy::full).pivot_values_with_lookahead();
    CHECK(realized_growth(pd, d).growth <= 2.0);
  }
}

TEST_CASE("LDU of the lower bidiagonal matrix") {
  const Matrix b = gallery::bidiagonal(8);
  const LduDiagnostics d = ldu_diagnostics(b, cross_approximate(b, 7, PivotStrategy::full));
  CHECK(d.l == b);
  CHECK(d.d == Matrix::identity(8));
  CHECK(d.u == Matrix::identity(8));
  CHECK_FALSE(d.interchanges_performed);
  // B^-1 is the all-ones lower triangle, |.|_2 = 1 / (2 sin(pi / (2 (2n + 1)))).
  CHECK(d.norm_l_inv == doctest::Approx(1.0 / (2.0 * std::sin(std::numbers::pi / 34.0))).epsilon(1e-12));
  CHECK(d.r_m == doctest::Approx(d.norm_l_inv).epsilon(1e-12));
}

TEST_CASE("LDU of the quadratic-growth matrix") {
  const Matrix a = gallery::quad_growth(12);
  const CrossResult r = cross_approximate(a, 11, PivotStrategy::full);
  const LduDiagnostics d = ldu_diagnostics(a, r);
  CHECK_FALSE(d.interchanges_performed);
  CHECK(std::abs(d.last_pivot) == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(d.norm_d_inv == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(d.reconstruction_error < 1e-12);
}

TEST_CASE("LDU of the identity") {
  const Matrix a = Matrix::identity(5);
  const LduDiagnostics d = ldu_diagnostics(a, cross_approximate(a, 4, PivotStrategy::full));
  CHECK(d.l == a);
  CHECK(d.d == a);
  CHECK(d.u == a);
  CHECK(d.r_m == doctest::Approx(1.0));
  CHECK_THROWS_AS(ldu_diagnostics(a, cross_approximate(a, 3, PivotStrategy::full)),
                  PreconditionError);
}

TEST_CASE("pivot factors include the lookahead column") {
  const Matrix a = gallery::random_general(5, 11);
  const CrossResult r = cross_approximate(a, 2, PivotStrategy::full);
  const PivotFactors f = pivot_factors(r);
  CHECK(f.l11.rows() == 3);
  CHECK(f.l11(2, 2) == r.lookahead->value);
  CHECK(f.u11(1, 1) == 1.0);
}
