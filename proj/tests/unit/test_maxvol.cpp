#include <doctest.h>

#include <cstdlib>

#include "crossvol/errors.hpp"
#include "crossvol/gallery.hpp"
#include "crossvol/maxvol.hpp"

using namespace crossvol;

TEST_CASE("volume of fixed submatrices") {
  CHECK(volume(Matrix::identity(3), {0, 1}, {0, 1}) == 1.0);
  CHECK(volume(gallery::offdiag_identity(2), {0, 1}, {2, 3}) == 1.0);
  // d_k = d_{k-1} + d_{k-2}/4 from d_1 = 1, d_2 = 1.25: 1.5, 1.8125, 2.1875
  CHECK(volume(gallery::tridiag_bm(5), {0, 1, 2, 3, 4}, {0, 1, 2, 3, 4}) ==
        doctest::Approx(2.1875).epsilon(1e-14));
  CHECK_THROWS_AS(volume(Matrix::identity(3), {0, 1}, {0}), DimensionError);
  CHECK_THROWS_AS(volume(Matrix::identity(3), {0, 3}, {0, 1}), DimensionError);
}

TEST_CASE("binomial coefficients") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(6, 0) == 1);
  CHECK(binomial(3, 4) == 0);
  CHECK(binomial(200, 100) == std::numeric_limits<std::uint64_t>::max());
}

TEST_CASE("indefinite 2x2 counterexample") {
  const Matrix a = Matrix::from_rows({{0, 1}, {1, 0}});
  const VolumeResult overall = brute_force_maxvol(a, 1, false);
  CHECK(overall.volume == 1.0);
  CHECK(overall.row_set == IndexSet{0});
  CHECK(overall.col_set == IndexSet{1});
  const VolumeResult principal = brute_force_maxvol(a, 1, true);
  CHECK(principal.volume == 0.0);
  CHECK(principal.is_principal());
}

TEST_CASE("maximum entry of an SPSD matrix sits on the diagonal") {
  const VolumeResult r = brute_force_maxvol(Matrix::from_rows({{2, -1}, {-1, 2}}), 1, false);
  CHECK(r.volume == 2.0);
  CHECK(r.row_set == IndexSet{0});
  CHECK(r.col_set == IndexSet{0});
}

TEST_CASE("identity k = 2 attains volume 1 at a principal position") {
  const VolumeResult r = brute_force_maxvol(Matrix::identity(4), 2, false);
  CHECK(r.volume == 1.0);
  CHECK(r.is_principal());
  CHECK(r.row_set == IndexSet({0, 1}));
}

TEST_CASE("principal optimality on the block counterexample depends on parity") {
  // Odd orders leave an unpaired index with a zero row.
  for (std::size_t k : {1, 2, 3}) {
    const PrincipalCheck c = check_principal_optimality(gallery::offdiag_identity(k), 1);
    CHECK_FALSE(c.holds);
    CHECK(c.overall.volume == 1.0);
    CHECK(c.principal.volume == 0.0);
  }
  const PrincipalCheck odd = check_principal_optimality(gallery::offdiag_identity(3), 3);
  CHECK_FALSE(odd.holds);
  CHECK(odd.principal.volume == 0.0);
  // Order 2 finds I = {0, 2}, whose principal block is [[0,1],[1,0]].
  const PrincipalCheck even = check_principal_optimality(gallery::offdiag_identity(2), 2);
  CHECK(even.holds);
  CHECK(even.principal.volume == 1.0);
  CHECK(even.principal.row_set == IndexSet({0, 2}));
}

TEST_CASE("principal optimality holds for SPSD and DD samples") {
  for (std::uint64_t seed = 100; seed < 110; ++seed) {
    CHECK(check_principal_optimality(gallery::random_spsd(6, seed), 2).holds);
    CHECK(check_principal_optimality(gallery::random_dd(6, seed), 3).holds);
  }
}

TEST_CASE("enumeration cap and argument checks") {
  CHECK_THROWS_AS(brute_force_maxvol(Matrix::identity(4), 2, false, {10}), CapabilityError);
  CHECK_NOTHROW(brute_force_maxvol(Matrix::identity(4), 2, true, {10}));
  CHECK_THROWS_AS(brute_force_maxvol(Matrix::identity(4), 0, false), DimensionError);
  CHECK_THROWS_AS(brute_force_maxvol(Matrix::identity(4), 5, false), DimensionError);
}

TEST_CASE("column volume") {
  const Matrix b = Matrix::from_rows({{1, 0}, {0, 1}, {0, 0}});
  CHECK(column_volume(b, {0, 1}) == doctest::Approx(1.0));
  CHECK(column_volume(b, {}) == 1.0);
  const Matrix rep = Matrix::from_rows({{1, 1}, {2, 2}, {3, 3}});
  CHECK(column_volume(rep, {0, 1}) < 1e-14);
  CHECK(column_volume(Matrix::identity(2), {0, 1}) == doctest::Approx(1.0));
  CHECK(column_volume(Matrix(1, 3, 1.0), {0, 1}) == 0.0);
}

TEST_CASE("result does not depend on the thread count") {
  const Matrix a = gallery::random_general(8, 42);
  ::setenv("CROSSVOL_THREADS", "1", 1);
  const VolumeResult serial = brute_force_maxvol(a, 3, false);
  ::setenv("CROSSVOL_THREADS", "3", 1);
  const VolumeResult threaded = brute_force_maxvol(a, 3, false);
  ::unsetenv("CROSSVOL_THREADS");
  CHECK(serial.row_set == threaded.row_set);
  CHECK(serial.col_set == threaded.col_set);
  CHECK(serial.volume == threaded.volume);
}
