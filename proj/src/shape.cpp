#include "equilat/shape.hpp"

#include <algorithm>

#include "equilat/errors.hpp"

namespace equilat {

IndexShape::IndexShape(int d_, int c_, int n_) : d(d_), c(c_), n(n_) {
    if (d < 1 || c < 1 || n < 1) throw ShapeError("IndexShape: d, c, n must be >= 1");
}

std::int64_t IndexShape::universe_size() const {
    std::int64_t s = c;
    for (int k = 0; k < d; ++k) s *= n;
    return s;
}

bool IndexShape::contains(const IndexTuple& t) const {
    if (static_cast<int>(t.size()) != d + 1) return false;
    for (int k = 0; k < d; ++k)
        if (t[k] < 1 || t[k] > n) return false;
    return t[d] >= 1 && t[d] <= c;
}

int basis_index_compare(const IndexTuple& a, const IndexTuple& b) {
    if (a.size() != b.size()) throw ShapeError("basis_index_compare: tuple arities differ");
    const int d = static_cast<int>(a.size()) - 1;
    if (a[d] != b[d]) return a[d] < b[d] ? -1 : 1;
    const int ma = *std::max_element(a.begin(), a.begin() + d);
    const int mb = *std::max_element(b.begin(), b.begin() + d);
    if (ma != mb) return ma < mb ? -1 : 1;
    for (int k = 0; k < d; ++k)
        if (a[k] != b[k]) return a[k] < b[k] ? -1 : 1;
    return 0;
}

std::vector<IndexTuple> universe(const IndexShape& shape) {
    std::vector<IndexTuple> out;
    out.reserve(static_cast<size_t>(shape.universe_size()));
    IndexTuple t(shape.d + 1, 1);
    for (;;) {
        out.push_back(t);
        int k = shape.d;
        for (;;) {
            const int limit = (k == shape.d) ? shape.c : shape.n;
            if (++t[k] <= limit) break;
            t[k] = 1;
            if (--k < 0) break;
        }
        if (k < 0) break;
    }
    std::sort(out.begin(), out.end(), IndexTupleLess{});
    return out;
}

}  // namespace equilat
