#pragma once

#include <filesystem>
#include <istream>
#include <ostream>
#include <string>

#include "crossvol/matrix.hpp"

namespace crossvol {

/// Matrix text format: optional '#' comment lines, a header line
/// "n_rows n_cols", then n_rows lines of n_cols whitespace-separated numbers.
/// Throws ParseError on malformed input.
Matrix read_matrix(std::istream& in);
Matrix read_matrix_file(const std::filesystem::path& path);

void write_matrix(std::ostream& out, const Matrix& a);
void write_matrix_file(const std::filesystem::path& path, const Matrix& a);

/// Shortest decimal that round-trips to the same double.
std::string format_number(double v);

/// Comma-separated grid, one line per row.
void write_csv(std::ostream& out, const Matrix& a);

}  // namespace crossvol
