#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gwht/gf.hpp"

namespace gwht {

/// Dense row-major matrix over a finite field. Shape may be 0 x n.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Element> data);
  static Matrix identity(std::size_t n);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

  Element& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  Element operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

  [[nodiscard]] std::span<const Element> row(std::size_t r) const noexcept {
    return {data_.data() + r * cols_, cols_};
  }
  [[nodiscard]] std::span<Element> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
  [[nodiscard]] Vector column(std::size_t c) const;

  /// Appends `count` all-zero columns on the right.
  [[nodiscard]] Matrix with_zero_columns(std::size_t count) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Element> data_;
};

struct RowEchelon {
  Matrix reduced;                   // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;  // pivot column of each remaining row
};

RowEchelon row_reduce(const Field& field, Matrix m);
std::size_t rank(const Field& field, const Matrix& m);

/// Rows form a basis of {x : m x^T = 0}; for a full-rank m this is the dual code.
Matrix null_space(const Field& field, const Matrix& m);

/// a * b^T.
Matrix multiply_transpose(const Field& field, const Matrix& a, const Matrix& b);

/// m * x^T.
Vector multiply(const Field& field, const Matrix& m, std::span<const Element> x);

bool is_zero(std::span<const Element> v) noexcept;

}  // namespace gwht
