#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace crossvol {

/// Dense real matrix stored row-major. Indices are 0-based.
///
/// All entries are finite; constructors that take external data reject NaN
/// and Inf. A 0x0 matrix is representable so that "empty input" can be
/// reported by the operations that consume it.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries);

  static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows);
  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const double> d);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return data_.empty(); }
  bool is_square() const noexcept { return rows_ == cols_; }

  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<double> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::vector<double> column(std::size_t j) const;

  std::span<const double> data() const noexcept { return data_; }

  Matrix transpose() const;
  Matrix submatrix(std::span<const std::size_t> row_idx,
                   std::span<const std::size_t> col_idx) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(double s, const Matrix& a);

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Strictly increasing list of 0-based indices.
class IndexSet {
 public:
  IndexSet() = default;
  /// Throws PreconditionError unless `indices` is strictly increasing.
  explicit IndexSet(std::vector<std::size_t> indices);
  IndexSet(std::initializer_list<std::size_t> indices)
      : IndexSet(std::vector<std::size_t>(indices)) {}

  /// Sorts; throws PreconditionError on duplicates.
  static IndexSet from_unsorted(std::vector<std::size_t> indices);

  std::size_t size() const noexcept { return indices_.size(); }
  bool empty() const noexcept { return indices_.empty(); }
  std::size_t operator[](std::size_t k) const { return indices_[k]; }
  auto begin() const noexcept { return indices_.begin(); }
  auto end() const noexcept { return indices_.end(); }
  std::span<const std::size_t> view() const noexcept { return indices_; }
  bool contains(std::size_t i) const;

  /// Throws DimensionError if any index is >= extent.
  void check_bounds(std::size_t extent) const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;
  friend auto operator<=>(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<std::size_t> indices_;
};

}  // namespace crossvol
