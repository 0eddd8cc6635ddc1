#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pervarr/error.hpp"
#include "pervarr/exact/field.hpp"

namespace pervarr {

template <Field F>
using Vector = std::vector<F>;

// Dense row-major matrix over an exact field. Shapes with zero rows or
// columns are legal.
template <Field F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, F::zero()) {}
  Matrix(std::initializer_list<std::initializer_list<F>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw DimensionError("ragged matrix literal");
      entries_.insert(entries_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F::one();
    return m;
  }

  static Matrix scalar(std::size_t n, const F& value) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = value;
    return m;
  }

  static Matrix column(std::span<const F> v) {
    Matrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
  }

  static Matrix from_columns(std::size_t rows, const std::vector<Vector<F>>& columns) {
    Matrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (columns[c].size() != rows) throw DimensionError("column length mismatch");
      for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  F& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const F& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const F> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }
  std::span<F> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }

  Vector<F> column_vector(std::size_t c) const {
    Vector<F> v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
  }

  bool is_zero() const {
    for (const auto& x : entries_) {
      if (!x.is_zero()) return false;
    }
    return true;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
    Matrix m(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = (*this)(rows[i], cols[j]);
    return m;
  }

  Vector<F> apply(std::span<const F> v) const {
    if (v.size() != cols_) throw DimensionError("vector length does not match column count");
    Vector<F> out(rows_, F::zero());
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (!v[c].is_zero() && !(*this)(r, c).is_zero()) out[r] += (*this)(r, c) * v[c];
    return out;
  }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols_ != y.rows_) {
      throw DimensionError("cannot multiply " + x.shape() + " by " + y.shape());
    }
    Matrix out(x.rows_, y.cols_);
    for (std::size_t r = 0; r < x.rows_; ++r)
      for (std::size_t k = 0; k < x.cols_; ++k) {
        const F& xk = x(r, k);
        if (xk.is_zero()) continue;
        for (std::size_t c = 0; c < y.cols_; ++c)
          if (!y(k, c).is_zero()) out(r, c) += xk * y(k, c);
      }
    return out;
  }

  friend Matrix operator+(Matrix x, const Matrix& y) {
    x.require_same_shape(y);
    for (std::size_t i = 0; i < x.entries_.size(); ++i) x.entries_[i] += y.entries_[i];
    return x;
  }

  friend Matrix operator-(Matrix x, const Matrix& y) {
    x.require_same_shape(y);
    for (std::size_t i = 0; i < x.entries_.size(); ++i) x.entries_[i] -= y.entries_[i];
    return x;
  }

  Matrix scaled(const F& factor) const {
    Matrix m = *this;
    for (auto& x : m.entries_) x *= factor;
    return m;
  }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.entries_ == y.entries_;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

 private:
  void require_same_shape(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
      throw DimensionError("shape mismatch " + shape() + " vs " + other.shape());
    }
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> entries_;
};

template <Field F>
struct Echelon {
  Matrix<F> reduced;
  std::vector<std::size_t> pivots;  // strictly increasing column indices
};

}  // namespace pervarr
