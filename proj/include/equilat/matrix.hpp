#pragma once

#include <vector>

#include "equilat/vec.hpp"

namespace equilat {

// Dense matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& operator()(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const Int& operator()(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    std::vector<Int> row(int r) const;
    void set_row(int r, const std::vector<Int>& v);

    bool operator==(const IntMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Int> a_;
};

// Row-style Hermite normal form: echelon, positive pivots, entries above
// each pivot reduced into [0, pivot).  Same row span, same dimensions
// (trailing zero rows kept).
IntMatrix hnf(const IntMatrix& m);

// Nonzero rows of hnf(m).
IntMatrix hnf_nonzero(const IntMatrix& m);

int rank(const IntMatrix& m);

// Basis of the integer kernel {x : m x = 0}.  The integer kernel is
// saturated; the basis has cols - rank(m) members.
std::vector<std::vector<Int>> kernel_basis(const IntMatrix& m);

}  // namespace equilat
