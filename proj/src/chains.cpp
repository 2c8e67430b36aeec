#include "equilat/chains.hpp"

#include <algorithm>

#include "equilat/perm.hpp"

namespace equilat {

const char* scan_kind_name(ScanKind k) {
    switch (k) {
        case ScanKind::generating: return "generating";
        case ScanKind::markov: return "markov";
        case ScanKind::graver: return "graver";
        case ScanKind::groebner_lex: return "groebner-lex";
        case ScanKind::groebner_dlex: return "groebner-dlex";
        case ScanKind::groebner_revlex: return "groebner-revlex";
    }
    return "?";
}

bool scan_kind_theorem_backed(ScanKind k) {
    switch (k) {
        case ScanKind::generating:
        case ScanKind::markov:
        case ScanKind::graver:
        case ScanKind::groebner_lex:
            return true;
        case ScanKind::groebner_dlex:
        case ScanKind::groebner_revlex:
            return false;
    }
    return false;
}

int ChainSpec::seed_level() const {
    if (mode == ChainMode::per_level) return 1;
    if (seed.empty()) throw ShapeError("ChainSpec: seed must be nonempty");
    const int n0 = seed.front().shape().n;
    for (const auto& s : seed)
        if (s.shape() != IndexShape(d, c, n0))
            throw ShapeError("ChainSpec: seed vectors must share one shape");
    return n0;
}

namespace {

// Smallest Sym(n)-invariant lattice containing the seeds: close the HNF
// basis under adjacent transpositions, which generate Sym(n).  Increasing
// sublattice chains of Z^(I_n) stabilize, so this terminates.
LatticeHandle invariant_span(const ChainSpec& spec, int n) {
    const IndexShape shape(spec.d, spec.c, n);
    std::vector<IndexedVector> gens;
    for (const auto& s : spec.seed) gens.push_back(s.extend_to(n));
    LatticeHandle L(shape, gens);
    for (bool grew = true; grew;) {
        grew = false;
        std::vector<IndexedVector> basis = L.basis_vectors();
        for (int t = 1; t < n && !grew; ++t) {
            const PermutationWord tau = PermutationWord::transposition(n, t, t + 1);
            for (const auto& r : basis) {
                const IndexedVector img = act(tau, r);
                if (!L.member(img)) {
                    gens = L.basis_vectors();
                    gens.push_back(img);
                    L = LatticeHandle(shape, std::move(gens));
                    grew = true;
                    break;
                }
            }
        }
    }
    return L;
}

}  // namespace

TruncationResult truncation(const ChainSpec& spec, int n, const Budget& budget) {
    TruncationResult out;
    switch (spec.mode) {
        case ChainMode::per_level:
            if (!spec.level) throw ShapeError("ChainSpec: per_level chain without callback");
            out.lattice = spec.level(n);
            return out;
        case ChainMode::span:
            if (n < spec.seed_level()) throw ShapeError("truncation: level below seed level");
            out.lattice = invariant_span(spec, n);
            return out;
        case ChainMode::saturated_probe: {
            if (n < spec.seed_level()) throw ShapeError("truncation: level below seed level");
            // Intersect ever larger spans with level n until two consecutive
            // probe degrees agree.  The theorems guarantee the chain of
            // intersections becomes constant; consecutive equality is only a
            // finite-window signal for having reached that constant.
            LatticeHandle previous = intersect_truncation(invariant_span(spec, n), n);
            int N = n + 1;
            for (;; ++N) {
                LatticeHandle next = intersect_truncation(invariant_span(spec, N), n);
                if (next.same_lattice(previous)) break;
                previous = std::move(next);
            }
            out.lattice = std::move(previous);
            out.probe_degree = N;
            out.probed = true;
            return out;
        }
    }
    throw ShapeError("truncation: unknown mode");
}

namespace {

std::vector<IndexedVector> level_basis(const LatticeHandle& L, ScanKind kind,
                                       const Budget& budget) {
    switch (kind) {
        case ScanKind::generating:
            return L.basis_vectors();
        case ScanKind::graver:
            return graver_basis(L, budget).elements;
        case ScanKind::markov: {
            // The Graver basis is the certified Markov basis we can compute;
            // demand the finite-fiber certificate the verifier would need.
            if (!hilbert_basis(L, budget).elements.empty())
                throw RefusalError("markov scan: fibers are infinite at this level",
                                   "infinite-fiber");
            return graver_basis(L, budget).elements;
        }
        case ScanKind::groebner_lex:
        case ScanKind::groebner_dlex:
        case ScanKind::groebner_revlex: {
            TermOrderSpec order;
            order.kind = kind == ScanKind::groebner_lex ? TermOrderKind::lex
                         : kind == ScanKind::groebner_dlex ? TermOrderKind::dlex
                                                           : TermOrderKind::revlex;
            // Present the level by its Graver basis so the completion
            // certifies the full lattice congruence.
            const LatticeHandle presented =
                L.with_generators(graver_basis(L, budget).elements);
            return groebner_basis(presented, order, budget).elements;
        }
    }
    throw ShapeError("level_basis: unknown kind");
}

bool reps_equal(const std::vector<IndexedVector>& a, const std::vector<IndexedVector>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (!a[i].entries_equal(b[i])) return false;
    return true;
}

}  // namespace

ScanResult stabilization_scan(const ChainSpec& spec, ScanKind kind, int n_max, int window,
                              const Budget& budget) {
    if (window < 1) throw ShapeError("stabilization_scan: window must be >= 1");
    ScanResult result;
    const int p0 = spec.seed_level();
    for (int n = p0; n <= n_max; ++n) {
        const TruncationResult tr = truncation(spec, n, budget);
        std::vector<IndexedVector> basis = level_basis(tr.lattice, kind, budget);
        result.levels.push_back({n, basis_representatives(basis, tr.lattice.shape(), budget)});

        const int have = static_cast<int>(result.levels.size());
        if (have < window) continue;
        bool stable = true;
        for (int k = 1; k < window && stable; ++k)
            stable = reps_equal(result.levels[have - 1].representatives,
                                result.levels[have - 1 - k].representatives);
        if (stable) {
            StabilizationWitness w;
            w.kind = kind;
            w.level = result.levels[have - window].n;
            w.representatives = result.levels.back().representatives;
            w.confirmed_through = n;
            w.support_bound = support_bound_report(w.representatives);
            w.theorem_backed = scan_kind_theorem_backed(kind);
            result.witness = std::move(w);
            break;
        }
    }
    return result;
}

std::vector<IndexedVector> equivariant_basis_extract(const LatticeHandle& L_n,
                                                     const std::vector<IndexedVector>& basis,
                                                     const Budget& budget) {
    const IndexShape& shape = L_n.shape();
    std::vector<IndexedVector> reps;
    for (const auto& v : basis) {
        if (v.is_zero()) continue;
        const int m = v.support_size();
        const int p = shape.d * m + 1;
        if (shape.n < p)
            throw ShapeError("equivariant_basis_extract: support too wide for the level");
        const PermutationWord sigma = reduce_width(v.support(), shape);
        reps.push_back(canonical_form(act(sigma, v).restrict_to(p), p, budget).extend_to(shape.n));
    }
    sort_canonical(reps);
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
    return reps;
}

int support_bound_report(const std::vector<IndexedVector>& basis) {
    int q = 0;
    for (const auto& v : basis) q = std::max(q, v.support_size());
    return q;
}

}  // namespace equilat
