#include "equilat/perm.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace equilat {

PermutationWord::PermutationWord(int degree) : images_(degree) {
    if (degree < 0) throw ShapeError("PermutationWord: negative degree");
    std::iota(images_.begin(), images_.end(), 1);
}

PermutationWord::PermutationWord(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
        if (v < 1 || v > static_cast<int>(images_.size()) || seen[v - 1])
            throw ShapeError("PermutationWord: images are not a bijection");
        seen[v - 1] = true;
    }
}

PermutationWord PermutationWord::transposition(int degree, int k, int l) {
    if (k < 1 || l < 1 || k > degree || l > degree)
        throw ShapeError("transposition: point outside degree");
    PermutationWord p(degree);
    std::swap(p.images_[k - 1], p.images_[l - 1]);
    return p;
}

int PermutationWord::apply(int i) const {
    if (i < 1) throw ShapeError("PermutationWord::apply: points are 1-based");
    return i <= degree() ? images_[i - 1] : i;
}

bool PermutationWord::is_identity() const {
    for (int i = 1; i <= degree(); ++i)
        if (images_[i - 1] != i) return false;
    return true;
}

PermutationWord PermutationWord::inverse() const {
    std::vector<int> inv(images_.size());
    for (int i = 1; i <= degree(); ++i) inv[images_[i - 1] - 1] = i;
    return PermutationWord(std::move(inv));
}

PermutationWord PermutationWord::after(const PermutationWord& other) const {
    const int deg = std::max(degree(), other.degree());
    std::vector<int> images(deg);
    for (int i = 1; i <= deg; ++i) images[i - 1] = apply(other.apply(i));
    return PermutationWord(std::move(images));
}

IndexedVector act(const PermutationWord& sigma, const IndexedVector& u) {
    const int n = std::max(sigma.degree(), u.shape().n);
    IndexedVector r(IndexShape(u.shape().d, u.shape().c, n));
    for (const auto& [idx, v] : u.entries()) {
        IndexTuple t = idx;
        for (int k = 0; k < u.shape().d; ++k) t[k] = sigma.apply(t[k]);
        r.set(t, v);
    }
    return r;
}

namespace {

// Distinct unbounded values touched by the support.
std::vector<int> active_values(const IndexedVector& u) {
    std::set<int> vals;
    for (const auto& [idx, v] : u.entries())
        for (int k = 0; k < u.shape().d; ++k) vals.insert(idx[k]);
    return {vals.begin(), vals.end()};
}

// Enumerates injective maps from `from` into [n], calling f per placement.
template <typename F>
void injective_placements(const std::vector<int>& from, int n, const Budget& budget, F&& f) {
    const int w = static_cast<int>(from.size());
    std::int64_t count = 1;
    for (int i = 0; i < w; ++i) {
        count *= (n - i);
        if (count > budget.orbit_cap) throw BudgetError("orbit: size cap exceeded");
    }
    std::vector<int> image(w);
    std::vector<bool> used(n + 1, false);
    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == w) {
            f(image);
            return;
        }
        for (int v = 1; v <= n; ++v) {
            if (used[v]) continue;
            used[v] = true;
            image[depth] = v;
            self(self, depth + 1);
            used[v] = false;
        }
    };
    rec(rec, 0);
}

}  // namespace

std::vector<IndexedVector> orbit(const IndexedVector& u, int n, const Budget& budget) {
    if (n < u.shape().n) throw ShapeError("orbit: level below the vector's shape");
    const IndexShape target(u.shape().d, u.shape().c, n);
    const std::vector<int> active = active_values(u);
    std::set<IndexedVector, CanonicalLess> seen;
    injective_placements(active, n, budget, [&](const std::vector<int>& image) {
        IndexedVector mapped(target);
        for (const auto& [idx, v] : u.entries()) {
            IndexTuple t = idx;
            for (int k = 0; k < u.shape().d; ++k) {
                const auto pos = std::lower_bound(active.begin(), active.end(), t[k]);
                t[k] = image[pos - active.begin()];
            }
            mapped.set(t, v);
        }
        seen.insert(std::move(mapped));
    });
    return {seen.begin(), seen.end()};
}

IndexedVector canonical_form(const IndexedVector& u, int n, const Budget& budget) {
    if (u.is_zero()) return u.extend_to(n);
    std::vector<IndexedVector> orb = orbit(u, n, budget);
    return orb.front();  // orbit() returns canonically sorted values
}

PermutationWord reduce_width(const std::vector<IndexTuple>& S, const IndexShape& shape) {
    const int m = static_cast<int>(S.size());
    const int p = shape.d * m + 1;
    if (shape.n < p) throw ShapeError("reduce_width: need n >= d*|S| + 1");
    for (const auto& t : S)
        if (!shape.contains(t)) throw ShapeError("reduce_width: index outside shape");

    std::vector<IndexTuple> current = S;
    PermutationWord sigma(shape.n);
    for (;;) {
        std::set<int> touched;
        for (const auto& t : current)
            for (int k = 0; k < shape.d; ++k) touched.insert(t[k]);
        int k_out = 0;
        for (int v : touched)
            if (v > p) k_out = v;
        if (k_out == 0) break;
        int l_free = 0;
        for (int l = 1; l <= p; ++l)
            if (!touched.count(l)) {
                l_free = l;
                break;
            }
        // |touched| <= d*m < p guarantees a free slot.
        const PermutationWord tau = PermutationWord::transposition(shape.n, k_out, l_free);
        for (auto& t : current)
            for (int k = 0; k < shape.d; ++k) t[k] = tau.apply(t[k]);
        sigma = tau.after(sigma);
    }
    return sigma;
}

PulledPermutations pull_permutation(const std::vector<PermutationWord>& sigmas, int m, int n) {
    const int h = static_cast<int>(sigmas.size());
    if (n < h * m + 1) throw ShapeError("pull_permutation: need n >= h*m + 1");

    // Transposition steps push the touched values beyond [n] back inside,
    // mirroring the induction of the construction.
    std::vector<PermutationWord> current = sigmas;
    std::vector<PermutationWord> steps;
    for (;;) {
        std::set<int> touched;
        for (const auto& s : current)
            for (int i = 1; i <= m; ++i) touched.insert(s.apply(i));
        int k_out = 0;
        for (int v : touched)
            if (v > n) k_out = v;
        if (k_out == 0) break;
        int l_free = 0;
        for (int l = 1; l <= n; ++l)
            if (!touched.count(l)) {
                l_free = l;
                break;
            }
        const PermutationWord pi = PermutationWord::transposition(std::max(k_out, n), k_out, l_free);
        steps.push_back(pi);
        for (auto& s : current) s = pi.after(s);
    }

    // Base case: every current sigma_j maps [m] into [n]; extend to Sym(n).
    PulledPermutations out;
    out.taus.reserve(h);
    for (const auto& s : current) {
        std::vector<int> images(n, 0);
        std::vector<bool> used(n + 1, false);
        for (int i = 1; i <= m; ++i) {
            images[i - 1] = s.apply(i);
            used[s.apply(i)] = true;
        }
        int next = 1;
        for (int i = m + 1; i <= n; ++i) {
            while (used[next]) ++next;
            images[i - 1] = next;
            used[next] = true;
        }
        out.taus.emplace_back(std::move(images));
    }
    // sigma = pi_t o ... o pi_1, matching the order the steps were applied.
    out.sigma = PermutationWord(0);
    for (const auto& pi : steps) out.sigma = pi.after(out.sigma);
    return out;
}

}  // namespace equilat
