#include <doctest.h>

#include <cmath>

#include "crossvol/errors.hpp"
#include "crossvol/linalg.hpp"
#include "crossvol/matrix.hpp"

using namespace crossvol;

TEST_CASE("matrix construction rejects non-finite entries and bad shapes") {
  CHECK_THROWS_AS(Matrix(2, 2, std::vector<double>{1, 2, 3}), DimensionError);
  CHECK_THROWS_AS(Matrix(1, 1, std::nan("")), Error);
  CHECK_THROWS_AS(Matrix::from_rows({{1, 2}, {3}}), DimensionError);
  const Matrix a = Matrix::from_rows({{1, 2, 3}, {4, 5, 6}});
  CHECK(a.transpose() == Matrix::from_rows({{1, 4}, {2, 5}, {3, 6}}));
  CHECK(a * Matrix::identity(3) == a);
}

TEST_CASE("index sets are strictly increasing") {
  CHECK_THROWS_AS(IndexSet({2, 1}), PreconditionError);
  CHECK_THROWS_AS(IndexSet({1, 1}), PreconditionError);
  CHECK(IndexSet::from_unsorted({3, 0, 2}) == IndexSet({0, 2, 3}));
  CHECK_THROWS_AS(IndexSet::from_unsorted({3, 3}), PreconditionError);
  CHECK_THROWS_AS(IndexSet({0, 4}).check_bounds(4), DimensionError);
}

TEST_CASE("max norm") {
  CHECK(max_norm(Matrix::from_rows({{1, -3}, {2, 0.5}})) == 3.0);
  CHECK(max_norm(Matrix::identity(4)) == 1.0);
  CHECK(max_norm(Matrix(3, 3)) == 0.0);
  CHECK_THROWS_AS(max_norm(Matrix()), DimensionError);
}

TEST_CASE("max norm equals the largest column infinity norm") {
  const Matrix b = Matrix::from_rows({{0.5, -7, 2}, {3, 1, -4}});
  double best = 0.0;
  for (std::size_t j = 0; j < b.cols(); ++j)
    for (double v : b.column(j)) best = std::max(best, std::abs(v));
  CHECK(max_norm(b) == best);
}

TEST_CASE("infinity-to-one norm by sign enumeration") {
  CHECK(inf_to_one_norm(Matrix::identity(2)) == 2.0);
  CHECK(inf_to_one_norm(Matrix::from_rows({{1, 1}, {1, 1}})) == 4.0);
  CHECK(inf_to_one_norm(Matrix::from_rows({{-2.5}})) == 2.5);
  // best of the 8 sign vectors is x = (-1, 1, 1): 0 + 15
  const Matrix b = Matrix::from_rows({{1, -2, 3}, {-4, 5, 6}});
  CHECK(inf_to_one_norm(b) == 15.0);
  CHECK_THROWS_AS(inf_to_one_norm(Matrix(1, 26)), CapabilityError);
  CHECK_THROWS_AS(inf_to_one_norm(Matrix(1, 5), 4), CapabilityError);
}

TEST_CASE("infinity-to-one norm crosses the Gray-code block boundary") {
  // 14 columns exercises more than one outer block; all-ones gives rows * cols.
  CHECK(inf_to_one_norm(Matrix(3, 14, 1.0)) == 42.0);
  Matrix alt(2, 14);
  for (std::size_t j = 0; j < 14; ++j) {
    alt(0, j) = (j % 2 == 0) ? 1.0 : -1.0;
    alt(1, j) = 1.0;
  }
  // |sum a - sum b| + |sum a + sum b| = 2 max(|sum a|, |sum b|) over even/odd halves.
  CHECK(inf_to_one_norm(alt) == 14.0);
}

TEST_CASE("singular values") {
  const auto s = singular_values(Matrix::from_rows({{3, 0}, {0, 1}}));
  CHECK(s[0] == doctest::Approx(3.0));
  CHECK(s[1] == doctest::Approx(1.0));
  const auto o = singular_values(Matrix::from_rows({{0, 1}, {1, 0}}));
  CHECK(o[0] == doctest::Approx(1.0));
  CHECK(o[1] == doctest::Approx(1.0));
  const auto r = singular_values(Matrix(2, 2, 1.0));
  CHECK(r[0] == doctest::Approx(2.0));
  CHECK(std::abs(r[1]) < 1e-14);
}

TEST_CASE("symmetric eigenvalues ascending") {
  const auto e = symmetric_eigenvalues(Matrix::from_rows({{2, -1}, {-1, 2}}));
  CHECK(e[0] == doctest::Approx(1.0));
  CHECK(e[1] == doctest::Approx(3.0));
}

TEST_CASE("determinant tracks permutation sign") {
  CHECK(determinant(Matrix::from_rows({{0, 1}, {1, 0}})) == -1.0);
  CHECK(determinant(Matrix::from_rows({{2, 1}, {0, 3}})) == doctest::Approx(6.0));
  CHECK(determinant(Matrix(3, 3, 1.0)) == 0.0);
}

TEST_CASE("solve, inverse and triangular inverse") {
  const Matrix a = Matrix::from_rows({{4, 1}, {2, 3}});
  const Matrix x = solve(a, Matrix::from_rows({{1}, {2}}));
  CHECK(x(0, 0) == doctest::Approx(0.1));
  CHECK(x(1, 0) == doctest::Approx(0.6));
  const Matrix prod = a * inverse(a);
  CHECK(max_norm(prod - Matrix::identity(2)) < 1e-15);
  CHECK_THROWS_AS(inverse(Matrix(2, 2, 1.0)), NumericalError);
  const Matrix l = Matrix::from_rows({{1, 0, 0}, {-1, 1, 0}, {0, -1, 1}});
  CHECK(triangular_inverse(l, true) == Matrix::from_rows({{1, 0, 0}, {1, 1, 0}, {1, 1, 1}}));
}
