#include "crossvol/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "crossvol/errors.hpp"

namespace crossvol {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    const std::size_t start = pos;
    while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    if (pos > start) fields.push_back(line.substr(start, pos - start));
  }
  return fields;
}

bool is_blank(std::string_view line) { return split_fields(line).empty(); }

std::size_t parse_size(std::string_view field, std::size_t line_no) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size() || value == 0) {
    throw ParseError("line " + std::to_string(line_no) + ": expected a positive integer, got '" +
                     std::string(field) + "'");
  }
  return value;
}

double parse_double(std::string_view field, std::size_t line_no) {
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size() || !std::isfinite(value)) {
    throw ParseError("line " + std::to_string(line_no) + ": expected a finite number, got '" +
                     std::string(field) + "'");
  }
  return value;
}

}  // namespace

Matrix read_matrix(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string_view> header;
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    header = split_fields(line);
    break;
  }
  if (header.size() != 2) {
    throw ParseError(header.empty() ? "missing 'n_rows n_cols' header"
                                    : "line " + std::to_string(line_no) +
                                          ": header must be 'n_rows n_cols'");
  }
  const std::size_t rows = parse_size(header[0], line_no);
  const std::size_t cols = parse_size(header[1], line_no);

  std::vector<double> entries;
  entries.reserve(rows * cols);
  std::size_t rows_read = 0;
  while (rows_read < rows && std::getline(in, line)) {
    ++line_no;
    const auto fields = split_fields(line);
    if (fields.empty()) continue;
    if (fields.size() != cols) {
      throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(cols) +
                       " values, got " + std::to_string(fields.size()));
    }
    for (auto f : fields) entries.push_back(parse_double(f, line_no));
    ++rows_read;
  }
  if (rows_read < rows) {
    throw ParseError("expected " + std::to_string(rows) + " rows, got " +
                     std::to_string(rows_read));
  }
  while (std::getline(in, line)) {
    ++line_no;
    if (!is_blank(line)) {
      throw ParseError("line " + std::to_string(line_no) + ": unexpected content after matrix");
    }
  }
  return Matrix(rows, cols, std::move(entries));
}

Matrix read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open matrix file '" + path.string() + "'");
  return read_matrix(in);
}

std::string format_number(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc()) throw NumericalError("format_number: conversion failed");
  return std::string(buf, ptr);
}

void write_matrix(std::ostream& out, const Matrix& a) {
  out << a.rows() << ' ' << a.cols() << '\n';
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j > 0) out << ' ';
      out << format_number(a(i, j));
    }
    out << '\n';
  }
}

void write_matrix_file(const std::filesystem::path& path, const Matrix& a) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  write_matrix(out, a);
}

void write_csv(std::ostream& out, const Matrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j > 0) out << ',';
      out << format_number(a(i, j));
    }
    out << '\n';
  }
}

}  // namespace crossvol
