#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "equilat/vec.hpp"

namespace equilat {

// Witness of an embedding-order comparison: a strictly increasing partial
// map of row indices.
struct IncEmbedding {
    std::vector<std::pair<int, int>> pairs;  // (i, pi(i)), i ascending
};

// Embedding order on nonnegative d=1 vectors viewed as finite sequences of
// columns in Z_{>=0}^c (column i collects the entries with unbounded
// coordinate i, up to the last nonzero column).  Returns a strictly
// increasing pi with column_u(i) <= column_v(pi(i)) componentwise for every
// i in that range, or nullopt when none exists.  Greedy leftmost matching;
// completeness is pinned against an exhaustive search in the tests.
std::optional<IncEmbedding> higman_leq(const IndexedVector& u, const IndexedVector& v);

}  // namespace equilat
