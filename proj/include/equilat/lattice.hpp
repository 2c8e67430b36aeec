#pragma once

#include <vector>

#include "equilat/matrix.hpp"
#include "equilat/vec.hpp"

namespace equilat {

// A lattice (subgroup of Z^(I_n)) given by generators, with a cached
// triangular HNF basis.  Freely copyable; never mutated after construction.
class LatticeHandle {
public:
    LatticeHandle() = default;
    LatticeHandle(IndexShape shape, std::vector<IndexedVector> generators);

    const IndexShape& shape() const { return shape_; }
    const std::vector<IndexedVector>& generators() const { return generators_; }
    const IntMatrix& hnf_basis() const { return hnf_; }
    const std::vector<IndexTuple>& columns() const { return columns_; }

    int rank() const { return hnf_.rows(); }
    bool is_zero() const { return rank() == 0; }

    // HNF basis rows as sparse vectors.
    std::vector<IndexedVector> basis_vectors() const;

    // u lies in the lattice; decided by reduction against the HNF basis.
    // Throws ShapeError when u's universe does not match.
    bool member(const IndexedVector& u) const;

    // Same lattice, re-presented by the given generators (callers certify
    // that the span is unchanged; checked via HNF equality).
    LatticeHandle with_generators(std::vector<IndexedVector> gens) const;

    std::vector<Int> to_dense(const IndexedVector& u) const;
    IndexedVector from_dense(const std::vector<Int>& row) const;

    bool same_lattice(const LatticeHandle& o) const;

private:
    IndexShape shape_;
    std::vector<IndexedVector> generators_;
    std::vector<IndexTuple> columns_;  // universe, sorted by basis_index_compare
    IntMatrix hnf_;                    // nonzero rows only
};

// {u in L : supp(u) inside [n_small]^d x [c]}, re-indexed at level n_small.
LatticeHandle intersect_truncation(const LatticeHandle& L, int n_small);

// Exactly {u in L : 0 < |u| <= bound}, by depth-first coefficient
// enumeration over the HNF basis with norm pruning.  Deterministic order.
// Throws BudgetError once the node budget is exhausted.
std::vector<IndexedVector> lattice_ball(const LatticeHandle& L, int bound,
                                        const Budget& budget = {});

}  // namespace equilat
