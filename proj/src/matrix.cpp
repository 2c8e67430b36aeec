#include "equilat/matrix.hpp"

namespace equilat {

std::vector<Int> IntMatrix::row(int r) const {
    std::vector<Int> v(cols_);
    for (int c = 0; c < cols_; ++c) v[c] = (*this)(r, c);
    return v;
}

void IntMatrix::set_row(int r, const std::vector<Int>& v) {
    for (int c = 0; c < cols_; ++c) (*this)(r, c) = v[c];
}

namespace {

// rows[i] <- s*rows[i] + t*rows[j], rows[j] <- u*rows[i0] + v*rows[j]
// with (s t; u v) unimodular, chosen so that rows[i][col] becomes
// gcd(rows[i][col], rows[j][col]) and rows[j][col] becomes zero.
void gcd_rows(IntMatrix& m, int i, int j, int col) {
    const Int p = m(i, col), q = m(j, col);
    if (q == 0) return;
    if (p == 0) {
        for (int c = 0; c < m.cols(); ++c) std::swap(m(i, c), m(j, c));
        return;
    }
    Int g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    const Int pg = p / g, qg = q / g;
    for (int c = 0; c < m.cols(); ++c) {
        const Int a = m(i, c), b = m(j, c);
        m(i, c) = s * a + t * b;
        m(j, c) = -qg * a + pg * b;
    }
}

}  // namespace

IntMatrix hnf(const IntMatrix& input) {
    IntMatrix m = input;
    int r = 0;
    for (int col = 0; col < m.cols() && r < m.rows(); ++col) {
        // Fold every nonzero entry below row r into one pivot.
        int pivot = -1;
        for (int i = r; i < m.rows(); ++i) {
            if (m(i, col) == 0) continue;
            if (pivot < 0)
                pivot = i;
            else
                gcd_rows(m, pivot, i, col);
        }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(r, c));
        if (m(r, col) < 0)
            for (int c = 0; c < m.cols(); ++c) m(r, c) = -m(r, c);
        // Reduce entries above the pivot into [0, pivot).
        for (int i = 0; i < r; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), m(i, col).get_mpz_t(), m(r, col).get_mpz_t());
            if (q == 0) continue;
            for (int c = 0; c < m.cols(); ++c) m(i, c) -= q * m(r, c);
        }
        ++r;
    }
    return m;
}

IntMatrix hnf_nonzero(const IntMatrix& m) {
    IntMatrix h = hnf(m);
    int nz = 0;
    for (int i = 0; i < h.rows(); ++i) {
        bool zero = true;
        for (int c = 0; c < h.cols() && zero; ++c) zero = h(i, c) == 0;
        if (!zero) ++nz;
    }
    IntMatrix out(nz, h.cols());
    for (int i = 0; i < nz; ++i) out.set_row(i, h.row(i));
    return out;
}

int rank(const IntMatrix& m) { return hnf_nonzero(m).rows(); }

std::vector<std::vector<Int>> kernel_basis(const IntMatrix& m) {
    // Rows of [m^T | I] span {(m x, x)}; after HNF the rows whose left part
    // vanished carry a basis of the kernel in their right part.
    const int R = m.rows(), C = m.cols();
    IntMatrix a(C, R + C);
    for (int i = 0; i < C; ++i) {
        for (int j = 0; j < R; ++j) a(i, j) = m(j, i);
        a(i, R + i) = 1;
    }
    const IntMatrix h = hnf(a);
    std::vector<std::vector<Int>> out;
    for (int i = 0; i < h.rows(); ++i) {
        bool left_zero = true;
        for (int j = 0; j < R && left_zero; ++j) left_zero = h(i, j) == 0;
        if (!left_zero) continue;
        std::vector<Int> x(C);
        bool nonzero = false;
        for (int j = 0; j < C; ++j) {
            x[j] = h(i, R + j);
            nonzero = nonzero || x[j] != 0;
        }
        if (nonzero) out.push_back(std::move(x));
    }
    return out;
}

}  // namespace equilat
