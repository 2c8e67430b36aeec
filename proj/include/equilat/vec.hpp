#pragma once

#include <gmpxx.h>

#include <map>
#include <vector>

#include "equilat/errors.hpp"
#include "equilat/shape.hpp"

namespace equilat {

using Int = mpz_class;

// Sparse exact-integer vector over [n]^d x [c].  Stored entries are nonzero
// and lie inside the shape; iteration follows basis_index_compare.
// Immutable in spirit: all operations return fresh values.
class IndexedVector {
public:
    using EntryMap = std::map<IndexTuple, Int, IndexTupleLess>;

    IndexedVector() = default;
    explicit IndexedVector(IndexShape shape) : shape_(shape) {}

    static IndexedVector unit(const IndexShape& shape, const IndexTuple& idx);

    const IndexShape& shape() const { return shape_; }
    const EntryMap& entries() const { return entries_; }

    // Removes the entry when v == 0; throws ShapeError on out-of-range idx.
    void set(const IndexTuple& idx, const Int& v);
    void add(const IndexTuple& idx, const Int& v);

    Int coeff(const IndexTuple& idx) const;

    bool is_zero() const { return entries_.empty(); }
    int support_size() const { return static_cast<int>(entries_.size()); }
    std::vector<IndexTuple> support() const;
    Int norm() const;

    bool is_nonnegative() const;

    IndexedVector operator+(const IndexedVector& o) const;
    IndexedVector operator-(const IndexedVector& o) const;
    IndexedVector operator-() const;
    IndexedVector scaled(const Int& k) const;

    bool operator==(const IndexedVector& o) const {
        return shape_ == o.shape_ && entries_ == o.entries_;
    }

    // True when the entry maps agree, ignoring the truncation level n.
    bool entries_equal(const IndexedVector& o) const {
        return shape_.same_kind(o.shape_) && entries_ == o.entries_;
    }

    // Reinterpret at a different truncation level.  restrict_to throws when
    // the support sticks out.
    IndexedVector extend_to(int n) const;
    IndexedVector restrict_to(int n) const;

private:
    IndexShape shape_;
    EntryMap entries_;
};

// Total order used for canonical sorting and orbit minimization: compares
// the sorted (index, value) entry streams lexicographically.
bool canonical_less(const IndexedVector& a, const IndexedVector& b);

struct CanonicalLess {
    bool operator()(const IndexedVector& a, const IndexedVector& b) const {
        return canonical_less(a, b);
    }
};

// u is conformally below v: entrywise non-opposing signs and |u_i| <= |v_i|.
bool conformal_leq(const IndexedVector& u, const IndexedVector& v);

struct SignSplit {
    IndexedVector plus;   // entrywise max(u_i, 0)
    IndexedVector minus;  // entrywise max(-u_i, 0)
};

SignSplit sign_split(const IndexedVector& u);

// The conformally minimal members of a finite set: those with no other
// member strictly below them.  Output is canonically sorted and pairwise
// incomparable.
std::vector<IndexedVector> conformal_minimal(std::vector<IndexedVector> xs);

void sort_canonical(std::vector<IndexedVector>& xs);

}  // namespace equilat
