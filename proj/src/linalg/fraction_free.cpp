#include "pervarr/linalg/fraction_free.hpp"

#include <vector>

namespace pervarr {

namespace {

struct PolynomialRows {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Polynomial> entries;
  Polynomial scale{1};  // product of the row multipliers

  Polynomial& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
};

// Multiplies each row by the product of its distinct denominators.
PolynomialRows clear_denominators(const Matrix<RationalFunction>& m) {
  PolynomialRows out;
  out.rows = m.rows();
  out.cols = m.cols();
  out.entries.reserve(out.rows * out.cols);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::vector<Polynomial> dens;
    Polynomial multiplier(1);
    for (const auto& x : m.row(r)) {
      const Polynomial& d = x.denominator();
      if (d.is_constant()) continue;
      bool seen = false;
      for (const auto& e : dens) seen = seen || e == d;
      if (!seen) {
        dens.push_back(d);
        multiplier *= d;
      }
    }
    for (const auto& x : m.row(r)) {
      if (x.denominator().is_constant()) {
        Rational inv = x.denominator().constant_value().inverse();
        out.entries.push_back(x.numerator().scaled(inv) * multiplier);
      } else {
        out.entries.push_back(x.numerator() * multiplier.exact_divide(x.denominator()));
      }
    }
    out.scale *= multiplier;
  }
  return out;
}

// In-place fraction-free row echelon form. Returns the number of pivots and
// flips *sign on each row swap.
std::size_t bareiss(PolynomialRows& m, int* sign, std::vector<std::size_t>* pivot_cols) {
  Polynomial previous(1);
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols && pivot_row < m.rows; ++col) {
    std::size_t found = pivot_row;
    while (found < m.rows && m.at(found, col).is_zero()) ++found;
    if (found == m.rows) continue;
    if (found != pivot_row) {
      for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(found, c), m.at(pivot_row, c));
      if (sign) *sign = -*sign;
    }
    const Polynomial pivot = m.at(pivot_row, col);
    for (std::size_t r = pivot_row + 1; r < m.rows; ++r) {
      const Polynomial factor = m.at(r, col);
      for (std::size_t c = col + 1; c < m.cols; ++c) {
        Polynomial v = m.at(r, c) * pivot - factor * m.at(pivot_row, c);
        m.at(r, c) = v.exact_divide(previous);
      }
      m.at(r, col) = Polynomial();
    }
    previous = pivot;
    if (pivot_cols) pivot_cols->push_back(col);
    ++pivot_row;
  }
  return pivot_row;
}

}  // namespace

Echelon<RationalFunction> fraction_free_rref(const Matrix<RationalFunction>& m) {
  PolynomialRows a = clear_denominators(m);
  std::vector<std::size_t> pivots;
  Polynomial previous(1);
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < a.cols && pivot_row < a.rows; ++col) {
    std::size_t found = pivot_row;
    while (found < a.rows && a.at(found, col).is_zero()) ++found;
    if (found == a.rows) continue;
    if (found != pivot_row) {
      for (std::size_t c = 0; c < a.cols; ++c) std::swap(a.at(found, c), a.at(pivot_row, c));
    }
    const Polynomial pivot = a.at(pivot_row, col);
    for (std::size_t r = 0; r < a.rows; ++r) {
      if (r == pivot_row) continue;
      const Polynomial factor = a.at(r, col);
      for (std::size_t c = 0; c < a.cols; ++c) {
        if (c == col) continue;
        Polynomial v = a.at(r, c) * pivot - factor * a.at(pivot_row, c);
        a.at(r, c) = v.exact_divide(previous);
      }
      a.at(r, col) = Polynomial();
    }
    previous = pivot;
    pivots.push_back(col);
    ++pivot_row;
  }

  Matrix<RationalFunction> reduced(a.rows, a.cols);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    for (std::size_t c = 0; c < a.cols; ++c) {
      if (c == pivots[r]) {
        reduced(r, c) = RationalFunction::one();
      } else if (!a.at(r, c).is_zero()) {
        reduced(r, c) = RationalFunction(a.at(r, c), previous);
      }
    }
  }
  return {std::move(reduced), std::move(pivots)};
}

RationalFunction fraction_free_determinant(const Matrix<RationalFunction>& m) {
  if (!m.is_square()) throw DimensionError("determinant of non-square " + m.shape() + " matrix");
  if (m.rows() == 0) return RationalFunction::one();
  PolynomialRows rows = clear_denominators(m);
  int sign = 1;
  if (bareiss(rows, &sign, nullptr) < rows.rows) return RationalFunction::zero();
  Polynomial det = rows.at(rows.rows - 1, rows.cols - 1);
  if (sign < 0) det = -det;
  return RationalFunction(std::move(det), rows.scale);
}

std::size_t fraction_free_rank(const Matrix<RationalFunction>& m) {
  PolynomialRows rows = clear_denominators(m);
  return bareiss(rows, nullptr, nullptr);
}

}  // namespace pervarr
