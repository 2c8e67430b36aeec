#include "equilat/higman.hpp"

namespace equilat {

namespace {

// Column i of a d=1 vector: the c entries with unbounded coordinate i.
std::vector<Int> column(const IndexedVector& u, int i) {
    std::vector<Int> col(u.shape().c);
    for (int j = 1; j <= u.shape().c; ++j) col[j - 1] = u.coeff({i, j});
    return col;
}

int last_nonzero_column(const IndexedVector& u) {
    int last = 0;
    for (const auto& [idx, v] : u.entries()) last = std::max(last, idx[0]);
    return last;
}

bool column_leq(const std::vector<Int>& a, const std::vector<Int>& b) {
    for (size_t j = 0; j < a.size(); ++j)
        if (a[j] > b[j]) return false;
    return true;
}

}  // namespace

std::optional<IncEmbedding> higman_leq(const IndexedVector& u, const IndexedVector& v) {
    if (u.shape().d != 1 || v.shape().d != 1) throw ShapeError("higman_leq: requires d = 1");
    if (u.shape().c != v.shape().c) throw ShapeError("higman_leq: bounded ranges differ");
    if (!u.is_nonnegative() || !v.is_nonnegative())
        throw ShapeError("higman_leq: negative inputs");

    const int nu = last_nonzero_column(u);
    const int nv = last_nonzero_column(v);
    IncEmbedding pi;
    int next = 1;
    for (int i = 1; i <= nu; ++i) {
        const std::vector<Int> cu = column(u, i);
        int target = 0;
        for (int j = next; j <= nv; ++j) {
            if (column_leq(cu, column(v, j))) {
                target = j;
                break;
            }
        }
        if (target == 0) return std::nullopt;
        pi.pairs.emplace_back(i, target);
        next = target + 1;
    }
    return pi;
}

}  // namespace equilat
