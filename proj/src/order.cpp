#include "equilat/order.hpp"

namespace equilat {

std::pair<Int, Int> first_last_coeff(const IndexedVector& u) {
    if (u.is_zero()) throw ShapeError("first_last_coeff: zero vector");
    // Entries iterate in basis_index_compare order already.
    return {u.entries().begin()->second, u.entries().rbegin()->second};
}

namespace {

int sign_of(const Int& v) { return sgn(v); }

}  // namespace

int term_compare(TermOrderSpec order, const IndexedVector& v, const IndexedVector& w) {
    if (v.shape() != w.shape()) throw ShapeError("term_compare: shape mismatch");
    if (!v.is_nonnegative() || !w.is_nonnegative())
        throw ShapeError("term_compare: negative input vector");
    const IndexedVector diff = v - w;
    if (diff.is_zero()) return 0;
    const auto [f, l] = first_last_coeff(diff);
    switch (order.kind) {
        case TermOrderKind::lex:
            return sign_of(l);
        case TermOrderKind::dlex: {
            const Int nv = v.norm(), nw = w.norm();
            if (nv != nw) return nv < nw ? -1 : 1;
            return sign_of(l);
        }
        case TermOrderKind::revlex: {
            const Int nv = v.norm(), nw = w.norm();
            if (nv != nw) return nv < nw ? -1 : 1;
            return -sign_of(f);
        }
    }
    return 0;  // unreachable
}

}  // namespace equilat
