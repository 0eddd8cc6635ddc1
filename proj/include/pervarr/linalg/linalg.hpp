#pragma once

#include <cstddef>
#include <vector>

#include "pervarr/linalg/fraction_free.hpp"
#include "pervarr/linalg/matrix.hpp"

namespace pervarr {

// Reduced row echelon form. The pivot in each column is the first nonzero
// entry at or below the current row, so results are reproducible.
template <Field F>
Echelon<F> rref(Matrix<F> m) {
  if constexpr (std::same_as<F, RationalFunction>) return fraction_free_rref(m);
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t found = row;
    while (found < m.rows() && m(found, col).is_zero()) ++found;
    if (found == m.rows()) continue;
    m.swap_rows(found, row);
    const F inv = m(row, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const F factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (!m(row, c).is_zero()) m(r, c) -= factor * m(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

template <Field F>
std::size_t rank(const Matrix<F>& m) {
  if constexpr (std::same_as<F, RationalFunction>) {
    return fraction_free_rank(m);
  } else {
    return rref(m).pivots.size();
  }
}

template <Field F>
F determinant(const Matrix<F>& m) {
  if (!m.is_square()) throw DimensionError("determinant of non-square " + m.shape() + " matrix");
  if constexpr (std::same_as<F, RationalFunction>) {
    return fraction_free_determinant(m);
  } else {
    Matrix<F> a = m;
    const std::size_t n = a.rows();
    F det = F::one();
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t found = col;
      while (found < n && a(found, col).is_zero()) ++found;
      if (found == n) return F::zero();
      if (found != col) {
        a.swap_rows(found, col);
        det = -det;
      }
      const F& pivot = a(col, col);
      det *= pivot;
      const F inv = pivot.inverse();
      for (std::size_t r = col + 1; r < n; ++r) {
        if (a(r, col).is_zero()) continue;
        const F factor = a(r, col) * inv;
        for (std::size_t c = col + 1; c < n; ++c) a(r, c) -= factor * a(col, c);
      }
    }
    return det;
  }
}

// Basis of {v : m v = 0}: one vector per free column f of rref(m), with a 1
// in coordinate f and zeros in the other free coordinates.
template <Field F>
std::vector<Vector<F>> kernel_basis(const Matrix<F>& m) {
  const auto [reduced, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector<F>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector<F> v(m.cols(), F::zero());
    v[free] = F::one();
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Coordinates of a kernel vector in kernel_basis(m): its free coordinates.
template <Field F>
Vector<F> kernel_coordinates(const Matrix<F>& m, std::span<const F> v) {
  const auto pivots = rref(m).pivots;
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  Vector<F> coords;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (!is_pivot[c]) coords.push_back(v[c]);
  }
  return coords;
}

// Quotient F^rows / im(m). The complement coordinates are those that are
// not pivots of rref(transpose(m)); representatives are the standard basis
// vectors on them, and projection maps any vector to its coordinates along
// those representatives, so projection * m == 0.
template <Field F>
struct Cokernel {
  Matrix<F> projection;
  std::vector<Vector<F>> representatives;
  std::vector<std::size_t> coordinates;

  std::size_t dimension() const { return coordinates.size(); }
};

template <Field F>
Cokernel<F> cokernel_basis(const Matrix<F>& m) {
  const std::size_t n = m.rows();
  const auto [reduced, pivots] = rref(m.transpose());
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;

  Cokernel<F> out;
  for (std::size_t j = 0; j < n; ++j) {
    if (!is_pivot[j]) out.coordinates.push_back(j);
  }
  out.projection = Matrix<F>(out.coordinates.size(), n);
  for (std::size_t jj = 0; jj < out.coordinates.size(); ++jj) {
    const std::size_t j = out.coordinates[jj];
    out.projection(jj, j) = F::one();
    for (std::size_t i = 0; i < pivots.size(); ++i) out.projection(jj, pivots[i]) = -reduced(i, j);
    Vector<F> rep(n, F::zero());
    rep[j] = F::one();
    out.representatives.push_back(std::move(rep));
  }
  return out;
}

template <Field F>
Matrix<F> delete_row_col(const Matrix<F>& m, std::size_t row, std::size_t col) {
  if (row >= m.rows() || col >= m.cols()) {
    throw DimensionError("cannot delete row " + std::to_string(row) + ", column " +
                         std::to_string(col) + " of a " + m.shape() + " matrix");
  }
  std::vector<std::size_t> rows, cols;
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (r != row) rows.push_back(r);
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (c != col) cols.push_back(c);
  return m.submatrix(rows, cols);
}

}  // namespace pervarr
