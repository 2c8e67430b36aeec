#pragma once

#include <random>
#include <vector>

#include "equilat/bases.hpp"
#include "equilat/lattice.hpp"

namespace equilat::testing {

// Dense d=1, c=1 vector (index i gets vals[i-1]); level defaults to the
// length of vals.
inline IndexedVector line(const std::vector<long>& vals, int n = 0) {
    const int level = n > 0 ? n : static_cast<int>(vals.size());
    IndexedVector u(IndexShape(1, 1, level));
    for (size_t i = 0; i < vals.size(); ++i)
        if (vals[i] != 0) u.set({static_cast<int>(i) + 1, 1}, Int(vals[i]));
    return u;
}

inline LatticeHandle line_lattice(const std::vector<std::vector<long>>& gens, int n) {
    std::vector<IndexedVector> gs;
    for (const auto& g : gens) gs.push_back(line(g, n));
    return LatticeHandle(IndexShape(1, 1, n), std::move(gs));
}

// d=2, c=1 unit e_(i1,i2).
inline IndexedVector grid_unit(int i1, int i2, int n) {
    return IndexedVector::unit(IndexShape(2, 1, n), {i1, i2, 1});
}

inline bool contains(const std::vector<IndexedVector>& xs, const IndexedVector& v) {
    for (const auto& x : xs)
        if (x == v) return true;
    return false;
}

inline bool same_set(std::vector<IndexedVector> a, std::vector<IndexedVector> b) {
    sort_canonical(a);
    sort_canonical(b);
    return a == b;
}

// Deterministic small random vector over the given shape.
inline IndexedVector random_vector(std::mt19937& rng, const IndexShape& shape, int max_abs,
                                   double density = 0.6) {
    std::uniform_real_distribution<double> keep(0.0, 1.0);
    std::uniform_int_distribution<int> coeff(-max_abs, max_abs);
    IndexedVector u(shape);
    for (const auto& idx : universe(shape))
        if (keep(rng) < density) u.set(idx, coeff(rng));
    return u;
}

}  // namespace equilat::testing
