#include "equilat/lattice.hpp"

#include <algorithm>
#include <map>

namespace equilat {

LatticeHandle::LatticeHandle(IndexShape shape, std::vector<IndexedVector> generators)
    : shape_(shape), generators_(std::move(generators)), columns_(universe(shape)) {
    for (const auto& g : generators_)
        if (g.shape() != shape_) throw ShapeError("LatticeHandle: generator shape mismatch");
    IntMatrix m(static_cast<int>(generators_.size()), static_cast<int>(columns_.size()));
    for (size_t i = 0; i < generators_.size(); ++i) m.set_row(static_cast<int>(i), to_dense(generators_[i]));
    hnf_ = hnf_nonzero(m);
}

std::vector<Int> LatticeHandle::to_dense(const IndexedVector& u) const {
    if (u.shape() != shape_) throw ShapeError("LatticeHandle: vector shape mismatch");
    std::vector<Int> row(columns_.size());
    size_t k = 0;
    for (const auto& [idx, v] : u.entries()) {
        while (k < columns_.size() && basis_index_compare(columns_[k], idx) < 0) ++k;
        row[k] = v;
    }
    return row;
}

IndexedVector LatticeHandle::from_dense(const std::vector<Int>& row) const {
    IndexedVector u(shape_);
    for (size_t k = 0; k < columns_.size(); ++k)
        if (row[k] != 0) u.set(columns_[k], row[k]);
    return u;
}

std::vector<IndexedVector> LatticeHandle::basis_vectors() const {
    std::vector<IndexedVector> out;
    out.reserve(hnf_.rows());
    for (int i = 0; i < hnf_.rows(); ++i) out.push_back(from_dense(hnf_.row(i)));
    return out;
}

bool LatticeHandle::member(const IndexedVector& u) const {
    std::vector<Int> x = to_dense(u);
    const int N = static_cast<int>(x.size());
    for (int i = 0; i < hnf_.rows(); ++i) {
        int p = 0;
        while (p < N && hnf_(i, p) == 0) ++p;
        if (x[p] == 0) continue;
        Int q, rem;
        mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), x[p].get_mpz_t(), hnf_(i, p).get_mpz_t());
        if (rem != 0) return false;
        for (int c = p; c < N; ++c) x[c] -= q * hnf_(i, c);
    }
    for (const Int& v : x)
        if (v != 0) return false;
    return true;
}

LatticeHandle LatticeHandle::with_generators(std::vector<IndexedVector> gens) const {
    LatticeHandle other(shape_, std::move(gens));
    if (!same_lattice(other)) throw ShapeError("with_generators: span changed");
    return other;
}

bool LatticeHandle::same_lattice(const LatticeHandle& o) const {
    return shape_ == o.shape_ && hnf_ == o.hnf_;
}

LatticeHandle intersect_truncation(const LatticeHandle& L, int n_small) {
    if (n_small > L.shape().n) throw ShapeError("intersect_truncation: level exceeds shape");
    const IndexShape small(L.shape().d, L.shape().c, n_small);
    // HNF with the outside coordinates leading: rows whose leading block is
    // zero span exactly the sublattice supported inside the small universe.
    const auto& cols = L.columns();
    std::vector<int> outside, inside;
    for (size_t k = 0; k < cols.size(); ++k) {
        bool in = true;
        for (int t = 0; t < L.shape().d && in; ++t) in = cols[k][t] <= n_small;
        (in ? inside : outside).push_back(static_cast<int>(k));
    }
    const IntMatrix& basis = L.hnf_basis();
    IntMatrix rearranged(basis.rows(), basis.cols());
    for (int i = 0; i < basis.rows(); ++i) {
        int c = 0;
        for (int k : outside) rearranged(i, c++) = basis(i, k);
        for (int k : inside) rearranged(i, c++) = basis(i, k);
    }
    const IntMatrix h = hnf(rearranged);
    std::vector<IndexedVector> gens;
    for (int i = 0; i < h.rows(); ++i) {
        bool outside_zero = true;
        for (size_t j = 0; j < outside.size() && outside_zero; ++j)
            outside_zero = h(i, static_cast<int>(j)) == 0;
        if (!outside_zero) continue;
        IndexedVector u(small);
        bool nonzero = false;
        for (size_t j = 0; j < inside.size(); ++j) {
            const Int& v = h(i, static_cast<int>(outside.size() + j));
            if (v != 0) {
                IndexTuple idx = cols[inside[j]];
                u.set(idx, v);
                nonzero = true;
            }
        }
        if (nonzero) gens.push_back(std::move(u));
    }
    return LatticeHandle(small, std::move(gens));
}

namespace {

struct BallSearch {
    const IntMatrix& h;
    const std::vector<int>& pivots;
    int bound;
    std::int64_t nodes_left;
    std::vector<Int> current;
    std::vector<std::vector<Int>> found;

    void run(int depth) {
        const int N = static_cast<int>(current.size());
        if (depth == static_cast<int>(pivots.size())) {
            Int norm = 0;
            for (const Int& v : current) norm += abs(v);
            if (norm > 0 && norm <= bound) found.push_back(current);
            return;
        }
        // Coordinates left of this pivot are final; prune on their norm.
        Int fixed_norm = 0;
        for (int c = 0; c < pivots[depth]; ++c) fixed_norm += abs(current[c]);
        if (fixed_norm > bound) return;
        // |current[p] + a*h(depth,p)| <= bound gives the coefficient range.
        const Int& step = h(depth, pivots[depth]);
        const Int& base = current[pivots[depth]];
        const Int hi_num = Int(bound) - base, lo_num = Int(-bound) - base;
        Int lo, hi;
        mpz_fdiv_q(hi.get_mpz_t(), hi_num.get_mpz_t(), step.get_mpz_t());
        mpz_cdiv_q(lo.get_mpz_t(), lo_num.get_mpz_t(), step.get_mpz_t());
        for (Int a = lo; a <= hi; ++a) {
            if (--nodes_left < 0) throw BudgetError("lattice_ball: node budget exceeded");
            std::vector<Int> saved = current;
            if (a != 0)
                for (int c = pivots[depth]; c < N; ++c) current[c] += a * h(depth, c);
            run(depth + 1);
            current = std::move(saved);
        }
    }
};

}  // namespace

std::vector<IndexedVector> lattice_ball(const LatticeHandle& L, int bound, const Budget& budget) {
    if (bound < 0) throw ShapeError("lattice_ball: negative bound");
    std::vector<IndexedVector> out;
    if (L.rank() == 0 || bound == 0) return out;
    const IntMatrix& h = L.hnf_basis();
    std::vector<int> pivots(h.rows());
    for (int i = 0; i < h.rows(); ++i) {
        int p = 0;
        while (h(i, p) == 0) ++p;
        pivots[i] = p;
    }
    BallSearch search{h, pivots, bound, budget.ball_nodes, std::vector<Int>(h.cols()), {}};
    search.run(0);
    for (const auto& row : search.found) out.push_back(L.from_dense(row));
    sort_canonical(out);
    return out;
}

}  // namespace equilat
