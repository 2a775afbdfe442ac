#include <doctest.h>

#include "crossvol/classify.hpp"
#include "crossvol/errors.hpp"
#include "crossvol/gallery.hpp"

using namespace crossvol;

TEST_CASE("upper triangular dominant matrix") {
  const MatrixClass c = classify(Matrix::from_rows({{2, 1}, {0, 3}}));
  CHECK(c.is_dd);
  CHECK(c.is_strictly_dd);
  CHECK(c.is_doubly_dd);
  CHECK_FALSE(c.is_spsd);
  CHECK_FALSE(c.is_symmetric);
}

TEST_CASE("second difference matrix is SPSD and doubly DD") {
  const MatrixClass c = classify(Matrix::from_rows({{2, -1}, {-1, 2}}));
  CHECK(c.is_symmetric);
  CHECK(c.is_spsd);
  CHECK(c.is_dd);
  CHECK(c.is_doubly_dd);
}

TEST_CASE("symmetric indefinite matrix belongs to no class") {
  const MatrixClass c = classify(Matrix::from_rows({{1, 2}, {2, 1}}));
  CHECK(c.is_symmetric);
  CHECK_FALSE(c.is_spsd);
  CHECK_FALSE(c.is_dd);
  CHECK_FALSE(c.is_strictly_dd);
  CHECK_FALSE(c.is_doubly_dd);
}

TEST_CASE("weak dominance is DD but not strict") {
  const MatrixClass c = classify(Matrix::from_rows({{1, 1}, {0, 1}}));
  CHECK(c.is_dd);
  CHECK_FALSE(c.is_strictly_dd);
  // column 1: off-diagonal 1 vs diagonal 1 is still dominant
  CHECK(c.is_doubly_dd);
}

TEST_CASE("row dominance alone is not doubly DD") {
  const MatrixClass c = classify(Matrix::from_rows({{3, 1}, {2, 3}}));
  CHECK(c.is_strictly_dd);
  CHECK(c.is_doubly_dd);
  const MatrixClass d = classify(Matrix::from_rows({{3, 2, 0}, {1, 3, 0}, {2.5, 0, 3}}));
  CHECK(d.is_dd);
  CHECK_FALSE(d.is_doubly_dd);
}

TEST_CASE("tolerance is relative to the max norm") {
  const double tiny = 1e-14;
  const Matrix a = Matrix::from_rows({{1, tiny}, {0, 1}});
  CHECK(classify(a).is_symmetric);
  CHECK_FALSE(classify(a, 0.0).is_symmetric);
  const Matrix scaled = 1e6 * Matrix::from_rows({{2, -1}, {-1, 2}});
  CHECK(classify(scaled).is_spsd);
}

TEST_CASE("non-square input is rejected") {
  CHECK_THROWS_AS(classify(Matrix(2, 3)), DimensionError);
}

TEST_CASE("gallery classes are reported for every seed tried") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    CHECK(classify(gallery::random_spsd(8, seed)).is_spsd);
    CHECK(classify(gallery::random_dd(8, seed)).is_strictly_dd);
    CHECK(classify(gallery::random_doubly_dd(8, seed)).is_doubly_dd);
  }
  for (std::size_t n : {4, 8, 12}) CHECK(classify(gallery::quad_growth(n)).is_dd);
  CHECK(classify(gallery::tridiag_bm(6)).is_doubly_dd);
  CHECK(classify(gallery::block_remark(6)).is_dd);
}
