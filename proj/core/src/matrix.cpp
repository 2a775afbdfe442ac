#include "crossvol/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "crossvol/errors.hpp"

namespace crossvol {

namespace {

void require_finite(std::span<const double> values) {
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (!std::isfinite(values[k])) {
      throw NumericalError("non-finite matrix entry at flat index " + std::to_string(k));
    }
  }
}

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string("shape mismatch in ") + op);
  }
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {
  if (!std::isfinite(fill)) throw NumericalError("non-finite fill value");
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) {
    throw DimensionError("entry count " + std::to_string(data_.size()) + " does not match " +
                         std::to_string(rows_) + "x" + std::to_string(cols_));
  }
  require_finite(data_);
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<double> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw DimensionError("ragged row list");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return Matrix(r, c, std::move(entries));
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(std::span<const double> d) {
  require_finite(d);
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

std::vector<double> Matrix::column(std::size_t j) const {
  std::vector<double> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::submatrix(std::span<const std::size_t> row_idx,
                         std::span<const std::size_t> col_idx) const {
  Matrix s(row_idx.size(), col_idx.size());
  for (std::size_t a = 0; a < row_idx.size(); ++a) {
    if (row_idx[a] >= rows_) throw DimensionError("row index out of range");
    for (std::size_t b = 0; b < col_idx.size(); ++b) {
      if (col_idx[b] >= cols_) throw DimensionError("column index out of range");
      s(a, b) = (*this)(row_idx[a], col_idx[b]);
    }
  }
  return s;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("inner dimensions differ in product");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "sum");
  Matrix c = a;
  for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] += b.data_[k];
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "difference");
  Matrix c = a;
  for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] -= b.data_[k];
  return c;
}

Matrix operator*(double s, const Matrix& a) {
  Matrix c = a;
  for (double& v : c.data_) v *= s;
  return c;
}

IndexSet::IndexSet(std::vector<std::size_t> indices) : indices_(std::move(indices)) {
  for (std::size_t k = 1; k < indices_.size(); ++k) {
    if (indices_[k] <= indices_[k - 1]) {
      throw PreconditionError("index set must be strictly increasing");
    }
  }
}

IndexSet IndexSet::from_unsorted(std::vector<std::size_t> indices) {
  std::sort(indices.begin(), indices.end());
  if (std::adjacent_find(indices.begin(), indices.end()) != indices.end()) {
    throw PreconditionError("duplicate index in index set");
  }
  return IndexSet(std::move(indices));
}

bool IndexSet::contains(std::size_t i) const {
  return std::binary_search(indices_.begin(), indices_.end(), i);
}

void IndexSet::check_bounds(std::size_t extent) const {
  if (!indices_.empty() && indices_.back() >= extent) {
    throw DimensionError("index " + std::to_string(indices_.back()) +
                         " out of range for dimension " + std::to_string(extent));
  }
}

}  // namespace crossvol
