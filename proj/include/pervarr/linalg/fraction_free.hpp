#pragma once

#include <cstddef>

#include "pervarr/linalg/matrix.hpp"

namespace pervarr {

// Determinant over Q(t1..tn) by Bareiss elimination. Rows are first scaled
// to polynomial entries; every intermediate division is exact in Q[t].
RationalFunction fraction_free_determinant(const Matrix<RationalFunction>& m);

// Reduced row echelon form over Q(t1..tn) by fraction-free Gauss-Jordan
// elimination: all pivots end equal to one polynomial D and the result is
// the polynomial matrix divided by D.
Echelon<RationalFunction> fraction_free_rref(const Matrix<RationalFunction>& m);

// Rank over Q(t1..tn) by the same division-postponed elimination.
std::size_t fraction_free_rank(const Matrix<RationalFunction>& m);

}  // namespace pervarr
