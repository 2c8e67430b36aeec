#pragma once

#include <cstdint>
#include <vector>

namespace equilat {

// Index tuple (i_1, ..., i_d, j): d unbounded coordinates followed by one
// bounded coordinate j.  All coordinates are 1-based.
using IndexTuple = std::vector<int>;

// Finite index universe [n]^d x [c].
struct IndexShape {
    int d = 1;  // number of unbounded coordinates
    int c = 1;  // range of the bounded coordinate
    int n = 1;  // truncation level

    IndexShape() = default;
    IndexShape(int d_, int c_, int n_);

    std::int64_t universe_size() const;
    bool contains(const IndexTuple& t) const;
    bool same_kind(const IndexShape& other) const { return d == other.d && c == other.c; }
    bool operator==(const IndexShape&) const = default;
};

// Well-ordering on basis indices: the bounded coordinate compares first;
// ties are broken by the maximal component of the d-tuple, then by the sign
// of the leftmost nonzero component of the coordinatewise difference.
// Returns <0, 0 or >0.
int basis_index_compare(const IndexTuple& a, const IndexTuple& b);

struct IndexTupleLess {
    bool operator()(const IndexTuple& a, const IndexTuple& b) const {
        return basis_index_compare(a, b) < 0;
    }
};

// Every index of the universe, sorted by basis_index_compare.
std::vector<IndexTuple> universe(const IndexShape& shape);

}  // namespace equilat
