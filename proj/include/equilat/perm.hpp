#pragma once

#include <set>
#include <vector>

#include "equilat/vec.hpp"

namespace equilat {

// A finite permutation: a bijection of [degree] extended by the identity
// beyond its degree.
class PermutationWord {
public:
    PermutationWord() = default;
    explicit PermutationWord(int degree);  // identity
    explicit PermutationWord(std::vector<int> images);

    static PermutationWord transposition(int degree, int k, int l);

    int degree() const { return static_cast<int>(images_.size()); }
    int apply(int i) const;  // identity beyond degree
    const std::vector<int>& images() const { return images_; }

    bool is_identity() const;
    PermutationWord inverse() const;

    // (*this) after `other`: apply(i) of the result is this->apply(other.apply(i)).
    PermutationWord after(const PermutationWord& other) const;

    bool operator==(const PermutationWord&) const = default;

private:
    std::vector<int> images_;  // images_[i-1] = image of i
};

// Permutes every unbounded coordinate of every index; the bounded
// coordinate stays put.  Result lives at level max(sigma.degree, u.shape.n).
IndexedVector act(const PermutationWord& sigma, const IndexedVector& u);

// The full Sym(n)-orbit of u, canonically sorted.  Requires n >= u.shape.n.
// Only injective placements of the values touching the support are
// enumerated.  Throws BudgetError when the orbit would exceed the cap.
std::vector<IndexedVector> orbit(const IndexedVector& u, int n, const Budget& budget = {});

// Minimum of orbit(u, n) under canonical_less; equal canonical forms
// characterize membership in one Sym(n)-orbit.
IndexedVector canonical_form(const IndexedVector& u, int n, const Budget& budget = {});

// For |S| = m index tuples inside [n]^d x [c] with n >= p = d*m + 1, builds
// sigma in Sym(n) with sigma(S) inside [p]^d x [c] by repeatedly swapping a
// touched value k > p with an untouched l <= p.
PermutationWord reduce_width(const std::vector<IndexTuple>& S, const IndexShape& shape);

struct PulledPermutations {
    PermutationWord sigma;                // fixes D pointwise
    std::vector<PermutationWord> taus;    // members of Sym(n)
};

// Given sigma_1..sigma_h and m, n with n >= h*m + 1, produces sigma and
// tau_1..tau_h in Sym(n) such that sigma fixes D = union sigma_j([m]) cap [n]
// pointwise and sigma(sigma_j(i)) = tau_j(i) for all i <= m.
PulledPermutations pull_permutation(const std::vector<PermutationWord>& sigmas, int m, int n);

}  // namespace equilat
