#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "crossvol/bounds.hpp"
#include "crossvol/errors.hpp"
#include "crossvol/gallery.hpp"
#include "crossvol/io.hpp"
#include "crossvol/parallel.hpp"
#include "crossvol/serialize.hpp"

using namespace crossvol;

TEST_CASE("matrix text round trip is exact") {
  const Matrix a = gallery::random_general(5, 2);
  std::ostringstream out;
  write_matrix(out, a);
  std::istringstream in(out.str());
  CHECK(read_matrix(in) == a);
}

TEST_CASE("matrix reader accepts comments before the header") {
  std::istringstream in("# comment\n\n# another\n2 2\n1 2\n3   4.5\n");
  CHECK(read_matrix(in) == Matrix::from_rows({{1, 2}, {3, 4.5}}));
}

TEST_CASE("matrix reader rejects malformed input") {
  for (const char* bad : {"", "2\n1 2\n", "2 2\n1 2\n3\n", "2 2\n1 2\n3 x\n", "1 1\n1\n2\n",
                          "1 2\n1 2 3\n", "1 1\nnan\n", "0 2\n", "-1 2\n"}) {
    std::istringstream in(bad);
    CHECK_THROWS_AS(read_matrix(in), ParseError);
  }
  CHECK_THROWS_AS(read_matrix_file("/nonexistent/m.mat"), ParseError);
}

TEST_CASE("number formatting is shortest round trip") {
  CHECK(format_number(0.5) == "0.5");
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(-3.0) == "-3");
  const double third = 1.0 / 3.0;
  CHECK(std::strtod(format_number(third).c_str(), nullptr) == third);
}

TEST_CASE("CSV output") {
  std::ostringstream out;
  write_csv(out, Matrix::from_rows({{1, -0.25}, {2.5, 0}}));
  CHECK(out.str() == "1,-0.25\n2.5,0\n");
}

TEST_CASE("bound report JSON round trip") {
  const BoundReport r = bound_report(gallery::random_spsd(8, 7), 3);
  const std::string text = to_json(r);
  CHECK(bound_report_from_json(text) == r);
  CHECK(text.find("\"spsd\"") != std::string::npos);
  CHECK_THROWS_AS(bound_report_from_json("{not json"), ParseError);
}

TEST_CASE("JSON indices are one-based") {
  const auto j = nlohmann::json::parse(to_json(brute_force_maxvol(Matrix::identity(3), 1, false)));
  CHECK(j.at("row_set") == nlohmann::json::array({1}));
  CHECK(j.at("col_set") == nlohmann::json::array({1}));
}

TEST_CASE("thread count honors the environment") {
  ::setenv("CROSSVOL_THREADS", "2", 1);
  CHECK(thread_count() == 2);
  ::setenv("CROSSVOL_THREADS", "0", 1);
  CHECK(thread_count() >= 1);
  ::unsetenv("CROSSVOL_THREADS");
  CHECK(thread_count() >= 1);
}

TEST_CASE("parallel chunks cover the range once and rethrow failures") {
  std::vector<int> hits(100, 0);
  const std::size_t chunks = parallel_chunks(
      100, [&](std::size_t, std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) ++hits[i];
      },
      4);
  CHECK(chunks >= 1);
  for (int h : hits) CHECK(h == 1);
  CHECK_THROWS_AS(parallel_chunks(
                      10, [](std::size_t, std::size_t, std::size_t) { throw NumericalError("x"); },
                      2),
                  NumericalError);
}
