#include "gwht/linalg.hpp"

#include <algorithm>
#include <stdexcept>

#include "gwht/errors.hpp"

namespace gwht {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Element> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) throw std::invalid_argument("matrix data has wrong size");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Field::one();
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

Matrix Matrix::with_zero_columns(std::size_t count) const {
  Matrix out(rows_, cols_ + count);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::copy(row(r).begin(), row(r).end(), out.row(r).begin());
  }
  return out;
}

RowEchelon row_reduce(const Field& field, Matrix m) {
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t pivot = lead_row;
    while (pivot < m.rows() && m(pivot, c).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != lead_row) {
      auto a = m.row(pivot);
      auto b = m.row(lead_row);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    const Element scale = field.inv(m(lead_row, c));
    for (Element& x : m.row(lead_row)) x = field.mul(x, scale);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || m(r, c).is_zero()) continue;
      const Element factor = m(r, c);
      for (std::size_t j = 0; j < m.cols(); ++j) {
        m(r, j) = field.sub(m(r, j), field.mul(factor, m(lead_row, j)));
      }
    }
    pivots.push_back(c);
    ++lead_row;
  }
  Matrix reduced(lead_row, m.cols());
  for (std::size_t r = 0; r < lead_row; ++r) {
    std::copy(m.row(r).begin(), m.row(r).end(), reduced.row(r).begin());
  }
  return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const Field& field, const Matrix& m) { return row_reduce(field, m).pivots.size(); }

Matrix null_space(const Field& field, const Matrix& m) {
  const RowEchelon ech = row_reduce(field, m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : ech.pivots) is_pivot[c] = true;

  Matrix basis(n - ech.pivots.size(), n);
  std::size_t out = 0;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    basis(out, free) = Field::one();
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
      basis(out, ech.pivots[i]) = field.neg(ech.reduced(i, free));
    }
    ++out;
  }
  return basis;
}

Matrix multiply_transpose(const Field& field, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("multiply_transpose: column mismatch");
  Matrix out(a.rows(), b.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.rows(); ++j) out(i, j) = field.dot(a.row(i), b.row(j));
  }
  return out;
}

Vector multiply(const Field& field, const Matrix& m, std::span<const Element> x) {
  if (x.size() != m.cols()) throw InputError("vector length does not match matrix width");
  Vector out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) out[r] = field.dot(m.row(r), x);
  return out;
}

bool is_zero(std::span<const Element> v) noexcept {
  return std::all_of(v.begin(), v.end(), [](Element e) { return e.is_zero(); });
}

}  // namespace gwht
