#pragma once

#include <utility>

#include "equilat/vec.hpp"

namespace equilat {

enum class TermOrderKind { lex, dlex, revlex };

struct TermOrderSpec {
    TermOrderKind kind = TermOrderKind::dlex;
    bool operator==(const TermOrderSpec&) const = default;
};

// Coefficients of the first and last nonzero terms of u when its terms are
// listed by basis_index_compare.  Throws ShapeError on the zero vector.
std::pair<Int, Int> first_last_coeff(const IndexedVector& u);

// Strict comparison of nonnegative vectors; returns <0, 0 or >0.
//
//   lex:    sign of l(v - w)
//   dlex:   norm first, then sign of l(v - w)
//   revlex: norm first, then sign of f(v - w) reversed
//
// where f and l are the first/last coefficients above.  The resulting sign
// orientation (e_1 comes before e_2 under all three orders) is frozen by an
// exhaustive small-shape test.  For c > 1 the same definitions apply on top
// of the extended basis ordering, which compares the bounded coordinate
// first; this extension is pinned by the same test.
int term_compare(TermOrderSpec order, const IndexedVector& v, const IndexedVector& w);

}  // namespace equilat
