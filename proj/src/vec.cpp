#include "equilat/vec.hpp"

#include <algorithm>

namespace equilat {

IndexedVector IndexedVector::unit(const IndexShape& shape, const IndexTuple& idx) {
    IndexedVector u(shape);
    u.set(idx, 1);
    return u;
}

void IndexedVector::set(const IndexTuple& idx, const Int& v) {
    if (!shape_.contains(idx)) throw ShapeError("IndexedVector::set: index outside shape");
    if (v == 0)
        entries_.erase(idx);
    else
        entries_[idx] = v;
}

void IndexedVector::add(const IndexTuple& idx, const Int& v) {
    if (v == 0) return;
    if (!shape_.contains(idx)) throw ShapeError("IndexedVector::add: index outside shape");
    auto [it, fresh] = entries_.emplace(idx, v);
    if (!fresh) {
        it->second += v;
        if (it->second == 0) entries_.erase(it);
    }
}

Int IndexedVector::coeff(const IndexTuple& idx) const {
    auto it = entries_.find(idx);
    return it == entries_.end() ? Int(0) : it->second;
}

std::vector<IndexTuple> IndexedVector::support() const {
    std::vector<IndexTuple> s;
    s.reserve(entries_.size());
    for (const auto& [idx, v] : entries_) s.push_back(idx);
    return s;
}

Int IndexedVector::norm() const {
    Int s = 0;
    for (const auto& [idx, v] : entries_) s += abs(v);
    return s;
}

bool IndexedVector::is_nonnegative() const {
    for (const auto& [idx, v] : entries_)
        if (v < 0) return false;
    return true;
}

IndexedVector IndexedVector::operator+(const IndexedVector& o) const {
    if (shape_ != o.shape_) throw ShapeError("IndexedVector: shape mismatch in +");
    IndexedVector r = *this;
    for (const auto& [idx, v] : o.entries_) r.add(idx, v);
    return r;
}

IndexedVector IndexedVector::operator-(const IndexedVector& o) const {
    if (shape_ != o.shape_) throw ShapeError("IndexedVector: shape mismatch in -");
    IndexedVector r = *this;
    for (const auto& [idx, v] : o.entries_) r.add(idx, -v);
    return r;
}

IndexedVector IndexedVector::operator-() const {
    IndexedVector r(shape_);
    for (const auto& [idx, v] : entries_) r.entries_[idx] = -v;
    return r;
}

IndexedVector IndexedVector::scaled(const Int& k) const {
    IndexedVector r(shape_);
    if (k == 0) return r;
    for (const auto& [idx, v] : entries_) r.entries_[idx] = k * v;
    return r;
}

IndexedVector IndexedVector::extend_to(int n) const {
    if (n < shape_.n) throw ShapeError("extend_to: target level smaller than current");
    IndexedVector r(IndexShape(shape_.d, shape_.c, n));
    r.entries_ = entries_;
    return r;
}

IndexedVector IndexedVector::restrict_to(int n) const {
    IndexedVector r(IndexShape(shape_.d, shape_.c, n));
    for (const auto& [idx, v] : entries_) r.set(idx, v);  // set() range-checks
    return r;
}

bool canonical_less(const IndexedVector& a, const IndexedVector& b) {
    auto ia = a.entries().begin(), ea = a.entries().end();
    auto ib = b.entries().begin(), eb = b.entries().end();
    for (; ia != ea && ib != eb; ++ia, ++ib) {
        const int c = basis_index_compare(ia->first, ib->first);
        if (c != 0) return c < 0;
        if (ia->second != ib->second) return ia->second < ib->second;
    }
    return ia == ea && ib != eb;
}

bool conformal_leq(const IndexedVector& u, const IndexedVector& v) {
    if (u.shape() != v.shape()) throw ShapeError("conformal_leq: shape mismatch");
    for (const auto& [idx, uv] : u.entries()) {
        const Int vv = v.coeff(idx);
        if (sgn(uv) != sgn(vv)) return false;  // uv != 0 here, so signs must agree
        if (abs(uv) > abs(vv)) return false;
    }
    return true;
}

SignSplit sign_split(const IndexedVector& u) {
    SignSplit s{IndexedVector(u.shape()), IndexedVector(u.shape())};
    for (const auto& [idx, v] : u.entries()) {
        if (v > 0)
            s.plus.set(idx, v);
        else
            s.minus.set(idx, -v);
    }
    return s;
}

std::vector<IndexedVector> conformal_minimal(std::vector<IndexedVector> xs) {
    sort_canonical(xs);
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::vector<IndexedVector> out;
    for (size_t i = 0; i < xs.size(); ++i) {
        bool minimal = true;
        for (size_t j = 0; j < xs.size() && minimal; ++j)
            if (j != i && conformal_leq(xs[j], xs[i])) minimal = false;
        if (minimal) out.push_back(xs[i]);
    }
    return out;
}

void sort_canonical(std::vector<IndexedVector>& xs) {
    std::sort(xs.begin(), xs.end(), CanonicalLess{});
}

}  // namespace equilat
