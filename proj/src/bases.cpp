#include "equilat/bases.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "equilat/perm.hpp"

namespace equilat {

const char* basis_kind_name(BasisKind k) {
    switch (k) {
        case BasisKind::generating: return "generating";
        case BasisKind::markov: return "markov";
        case BasisKind::groebner: return "groebner";
        case BasisKind::universal_groebner_candidate: return "universal-groebner-candidate";
        case BasisKind::graver: return "graver";
        case BasisKind::hilbert: return "hilbert";
    }
    return "?";
}

namespace {

// No index carries strictly opposite signs; the sum of such a pair reduces
// to zero conformally, so the pair is useless for completion.
bool sign_compatible(const IndexedVector& f, const IndexedVector& g) {
    for (const auto& [idx, v] : f.entries()) {
        const Int w = g.coeff(idx);
        if (w != 0 && sgn(w) != sgn(v)) return false;
    }
    return true;
}

struct Completion {
    std::vector<IndexedVector> g;
    std::vector<Int> norms;
    std::set<IndexedVector, CanonicalLess> members;
    std::deque<std::pair<int, int>> queue;
    std::int64_t pairs_processed = 0;
    const Budget& budget;

    explicit Completion(const Budget& b) : budget(b) {}

    void insert(const IndexedVector& v) {
        if (v.is_zero() || members.count(v)) return;
        if (static_cast<std::int64_t>(g.size()) >= budget.max_elements)
            throw BudgetError("graver completion: element cap exceeded");
        const int t = static_cast<int>(g.size());
        g.push_back(v);
        norms.push_back(v.norm());
        members.insert(v);
        for (int j = 0; j < t; ++j)
            if (!sign_compatible(g[t], g[j])) queue.emplace_back(t, j);
    }

    IndexedVector normal_form(IndexedVector s) const {
        bool reduced = true;
        while (reduced && !s.is_zero()) {
            reduced = false;
            const Int ns = s.norm();
            for (size_t k = 0; k < g.size(); ++k) {
                if (norms[k] > ns) continue;
                if (conformal_leq(g[k], s)) {
                    s = s - g[k];
                    reduced = true;
                    break;
                }
            }
        }
        return s;
    }

    void run() {
        while (!queue.empty()) {
            if (++pairs_processed > budget.max_pairs)
                throw BudgetError("graver completion: pair cap exceeded");
            const auto [i, j] = queue.front();
            queue.pop_front();
            const IndexedVector r = normal_form(g[i] + g[j]);
            if (!r.is_zero()) {
                insert(r);
                insert(-r);
            }
        }
    }
};

}  // namespace

std::vector<IndexedVector> basis_representatives(const std::vector<IndexedVector>& elements,
                                                 const IndexShape& shape, const Budget& budget) {
    std::vector<IndexedVector> reps;
    for (const auto& v : elements) {
        if (v.is_zero()) continue;
        const int m = v.support_size();
        const int p = shape.d * m + 1;
        if (shape.n >= p) {
            const PermutationWord sigma = reduce_width(v.support(), shape);
            reps.push_back(canonical_form(act(sigma, v).restrict_to(p), p, budget));
        } else {
            reps.push_back(canonical_form(v, shape.n, budget));
        }
    }
    std::sort(reps.begin(), reps.end(), CanonicalLess{});
    reps.erase(std::unique(reps.begin(), reps.end(),
                           [](const IndexedVector& a, const IndexedVector& b) {
                               return a.entries_equal(b);
                           }),
               reps.end());
    return reps;
}

namespace {

void attach_representatives(BasisReport& report, const IndexShape& shape, const Budget& budget) {
    try {
        report.representatives = basis_representatives(report.elements, shape, budget);
    } catch (const BudgetError&) {
        report.representatives.clear();
    }
}

}  // namespace

BasisReport graver_basis(const LatticeHandle& L, const Budget& budget) {
    Completion comp(budget);
    for (const auto& b : L.generators()) {
        comp.insert(b);
        comp.insert(-b);
    }
    // Present the zero lattice or redundant generator lists compactly.
    if (comp.g.empty()) {
        BasisReport r;
        r.kind = BasisKind::graver;
        return r;
    }
    comp.run();

    BasisReport r;
    r.kind = BasisKind::graver;
    r.elements = conformal_minimal(comp.g);
    r.certificate.pairs_processed = comp.pairs_processed;
    r.certificate.elements_peak = static_cast<std::int64_t>(comp.g.size());
    attach_representatives(r, L.shape(), budget);
    return r;
}

std::vector<IndexedVector> graver_oracle(const LatticeHandle& L, int bound, const Budget& budget) {
    return conformal_minimal(lattice_ball(L, bound, budget));
}

BasisReport hilbert_basis(const LatticeHandle& L, const Budget& budget) {
    BasisReport g = graver_basis(L, budget);
    BasisReport r;
    r.kind = BasisKind::hilbert;
    for (const auto& v : g.elements)
        if (v.is_nonnegative()) r.elements.push_back(v);
    r.certificate = g.certificate;
    attach_representatives(r, L.shape(), budget);
    return r;
}

// --- Lawrence doubling ---------------------------------------------------

namespace {

IndexShape doubled(const IndexShape& s) { return IndexShape(s.d, 2 * s.c, s.n); }

// (a, b) as one vector of the doubled shape.
IndexedVector embed_pair(const IndexedVector& a, const IndexedVector& b) {
    IndexedVector w(doubled(a.shape()));
    for (const auto& [idx, v] : a.entries()) w.set(idx, v);
    for (const auto& [idx, v] : b.entries()) {
        IndexTuple t = idx;
        t[a.shape().d] += a.shape().c;
        w.set(t, v);
    }
    return w;
}

}  // namespace

LatticeHandle lawrence_lift(const LatticeHandle& L) {
    const IndexShape lifted = doubled(L.shape());
    std::vector<IndexedVector> gens;
    const IndexedVector zero(L.shape());
    for (const auto& b : L.generators()) gens.push_back(embed_pair(b, zero));
    for (const auto& idx : L.columns()) {
        const IndexedVector e = IndexedVector::unit(L.shape(), idx);
        gens.push_back(embed_pair(e, e));
    }
    return LatticeHandle(lifted, std::move(gens));
}

IndexedVector lawrence_project(const IndexedVector& w) {
    if (w.shape().c % 2 != 0) throw ShapeError("lawrence_project: bounded range is odd");
    const IndexShape half(w.shape().d, w.shape().c / 2, w.shape().n);
    IndexedVector u(half);
    for (const auto& [idx, v] : w.entries()) {
        IndexTuple t = idx;
        if (t[half.d] <= half.c) {
            u.add(t, v);
        } else {
            t[half.d] -= half.c;
            u.add(t, -v);
        }
    }
    return u;
}

bool hilbert_graver_crosscheck(const LatticeHandle& L, const Budget& budget) {
    const BasisReport graver = graver_basis(L, budget);
    const LatticeHandle lift = lawrence_lift(L);
    const BasisReport hilbert = hilbert_basis(lift, budget);

    std::set<IndexedVector, CanonicalLess> graver_set(graver.elements.begin(),
                                                      graver.elements.end());
    std::set<IndexedVector, CanonicalLess> projected;
    for (const auto& h : hilbert.elements) {
        IndexedVector u = lawrence_project(h);
        if (!u.is_zero()) projected.insert(std::move(u));
    }
    if (projected != graver_set) return false;

    std::set<IndexedVector, CanonicalLess> expected;
    for (const auto& u : graver.elements) {
        const SignSplit s = sign_split(u);
        expected.insert(embed_pair(s.plus, s.minus));
    }
    for (const auto& idx : L.columns()) {
        const IndexedVector e = IndexedVector::unit(L.shape(), idx);
        expected.insert(embed_pair(e, e));
    }
    std::set<IndexedVector, CanonicalLess> hilbert_set(hilbert.elements.begin(),
                                                       hilbert.elements.end());
    return hilbert_set == expected;
}

// --- Groebner ------------------------------------------------------------

DirectedVector DirectedVector::orient(const IndexedVector& v, TermOrderSpec order) {
    if (v.is_zero()) throw ShapeError("DirectedVector: zero vector");
    const SignSplit s = sign_split(v);
    const int c = term_compare(order, s.plus, s.minus);
    DirectedVector d;
    d.vector = c > 0 ? v : -v;
    return d;
}

namespace {

bool divides(const IndexedVector& a, const IndexedVector& m) {
    for (const auto& [idx, v] : a.entries())
        if (m.coeff(idx) < v) return false;
    return true;
}

bool supports_disjoint(const IndexedVector& a, const IndexedVector& b) {
    for (const auto& [idx, v] : a.entries())
        if (b.coeff(idx) != 0) return false;
    return true;
}

IndexedVector componentwise_max(const IndexedVector& a, const IndexedVector& b) {
    IndexedVector r = a;
    for (const auto& [idx, v] : b.entries())
        if (r.coeff(idx) < v) r.set(idx, v);
    return r;
}

struct Buchberger {
    std::vector<MonomialPair> g;
    std::deque<std::pair<int, int>> queue;
    std::int64_t pairs_processed = 0;
    std::int64_t rewrite_steps = 0;
    TermOrderSpec order;
    const Budget& budget;

    Buchberger(TermOrderSpec o, const Budget& b) : order(o), budget(b) {}

    void insert(const IndexedVector& v) {
        if (v.is_zero()) return;
        const DirectedVector d = DirectedVector::orient(v, order);
        const SignSplit s = sign_split(d.vector);
        for (const auto& e : g)
            if (e.a == s.plus && e.b == s.minus) return;
        if (static_cast<std::int64_t>(g.size()) >= budget.max_elements)
            throw BudgetError("groebner completion: element cap exceeded");
        const int t = static_cast<int>(g.size());
        g.push_back(MonomialPair{s.plus, s.minus});
        for (int j = 0; j < t; ++j) queue.emplace_back(t, j);
    }

    IndexedVector normal_form(IndexedVector m) {
        bool reduced = true;
        while (reduced) {
            reduced = false;
            for (const auto& e : g) {
                if (divides(e.a, m)) {
                    if (++rewrite_steps > budget.ball_nodes)
                        throw BudgetError("groebner completion: rewrite budget exceeded");
                    m = m - e.a + e.b;
                    reduced = true;
                    break;
                }
            }
        }
        return m;
    }

    void run() {
        while (!queue.empty()) {
            if (++pairs_processed > budget.max_pairs)
                throw BudgetError("groebner completion: pair cap exceeded");
            const auto [i, j] = queue.front();
            queue.pop_front();
            // Heads with disjoint support rewrite the overlap to the same
            // normal form; skip.
            if (supports_disjoint(g[i].a, g[j].a)) continue;
            const IndexedVector w = componentwise_max(g[i].a, g[j].a);
            const IndexedVector m1 = normal_form(w - g[i].a + g[i].b);
            const IndexedVector m2 = normal_form(w - g[j].a + g[j].b);
            if (!(m1 == m2)) insert(m1 - m2);
        }
    }

    void interreduce() {
        // Minimize: drop heads divisible by another kept head.
        std::vector<MonomialPair> kept;
        for (size_t i = 0; i < g.size(); ++i) {
            bool redundant = false;
            for (size_t j = 0; j < g.size() && !redundant; ++j) {
                if (i == j) continue;
                if (!divides(g[j].a, g[i].a)) continue;
                if (g[j].a == g[i].a)
                    redundant = j < i;  // equal heads: keep the first
                else
                    redundant = true;
            }
            if (!redundant) kept.push_back(g[i]);
        }
        g = std::move(kept);
        // Tail-reduce against the minimized set.  An element's own head
        // never divides monomials of its tail chain (they sit strictly
        // below it in the order), so reducing with the full set is sound.
        for (auto& e : g) e.b = normal_form(e.b);
    }
};

}  // namespace

BasisReport groebner_basis(const LatticeHandle& L, TermOrderSpec order, const Budget& budget) {
    Buchberger bb(order, budget);
    for (const auto& b : L.generators()) bb.insert(b);
    bb.run();
    bb.interreduce();

    BasisReport r;
    r.kind = BasisKind::groebner;
    r.order = order;
    for (const auto& e : bb.g) r.elements.push_back(e.a - e.b);
    sort_canonical(r.elements);
    r.elements.erase(std::unique(r.elements.begin(), r.elements.end()), r.elements.end());
    r.certificate.pairs_processed = bb.pairs_processed;
    r.certificate.elements_peak = static_cast<std::int64_t>(bb.g.size());
    attach_representatives(r, L.shape(), budget);
    return r;
}

// --- Fibers --------------------------------------------------------------

namespace {

void require_finite_fibers(const LatticeHandle& L, const Budget& budget) {
    if (!hilbert_basis(L, budget).elements.empty())
        throw RefusalError("fibers are infinite: the lattice meets the positive orthant",
                           "infinite-fiber");
}

}  // namespace

FiberGraph fiber_with_moves(const LatticeHandle& L, const IndexedVector& u,
                            const std::vector<IndexedVector>& graver_moves,
                            const Budget& budget) {
    if (u.shape() != L.shape()) throw ShapeError("fiber: shape mismatch");
    if (!u.is_nonnegative()) throw ShapeError("fiber: root must be nonnegative");
    std::set<IndexedVector, CanonicalLess> seen{u};
    std::deque<IndexedVector> frontier{u};
    while (!frontier.empty()) {
        const IndexedVector v = frontier.front();
        frontier.pop_front();
        for (const auto& m : graver_moves) {
            IndexedVector w = v - m;
            if (!w.is_nonnegative() || seen.count(w)) continue;
            if (static_cast<std::int64_t>(seen.size()) >= budget.max_elements)
                throw BudgetError("fiber: vertex cap exceeded");
            frontier.push_back(w);
            seen.insert(std::move(w));
        }
    }
    FiberGraph f;
    f.root = u;
    f.vertices.assign(seen.begin(), seen.end());
    f.moves = graver_moves;
    return f;
}

FiberGraph fiber(const LatticeHandle& L, const IndexedVector& u, const Budget& budget) {
    require_finite_fibers(L, budget);
    return fiber_with_moves(L, u, graver_basis(L, budget).elements, budget);
}

std::vector<IndexedVector> enumerate_nonneg(const IndexShape& shape, int bound) {
    const std::vector<IndexTuple> cols = universe(shape);
    std::vector<IndexedVector> out;
    IndexedVector current(shape);
    auto rec = [&](auto&& self, size_t k, int left) -> void {
        if (k == cols.size()) {
            out.push_back(current);
            return;
        }
        self(self, k + 1, left);
        for (int v = 1; v <= left; ++v) {
            current.set(cols[k], v);
            self(self, k + 1, left - v);
        }
        current.set(cols[k], 0);
    };
    rec(rec, 0, bound);
    sort_canonical(out);
    return out;
}

namespace {

bool is_move(const IndexedVector& diff, const std::set<IndexedVector, CanonicalLess>& moves) {
    return moves.count(diff) || moves.count(-diff);
}

}  // namespace

bool verify_markov(const LatticeHandle& L, const std::vector<IndexedVector>& B, int test_bound,
                   const Budget& budget, bool quotient_by_symmetry) {
    require_finite_fibers(L, budget);
    const std::vector<IndexedVector> graver_moves = graver_basis(L, budget).elements;
    const std::set<IndexedVector, CanonicalLess> move_set(B.begin(), B.end());

    std::set<IndexedVector, CanonicalLess> done;
    std::set<IndexedVector, CanonicalLess> canon_done;
    for (const auto& u : enumerate_nonneg(L.shape(), test_bound)) {
        if (done.count(u)) continue;
        if (quotient_by_symmetry) {
            IndexedVector cu = canonical_form(u, L.shape().n, budget);
            if (canon_done.count(cu)) continue;
            canon_done.insert(std::move(cu));
        }
        const FiberGraph f = fiber_with_moves(L, u, graver_moves, budget);
        for (const auto& v : f.vertices) done.insert(v);
        if (f.vertices.size() <= 1) continue;
        // Breadth-first over edges v - w in +-B.
        std::set<IndexedVector, CanonicalLess> reached{f.vertices.front()};
        std::deque<IndexedVector> frontier{f.vertices.front()};
        while (!frontier.empty()) {
            const IndexedVector v = frontier.front();
            frontier.pop_front();
            for (const auto& w : f.vertices) {
                if (reached.count(w)) continue;
                if (is_move(v - w, move_set)) {
                    reached.insert(w);
                    frontier.push_back(w);
                }
            }
        }
        if (reached.size() != f.vertices.size()) return false;
    }
    return true;
}

bool verify_groebner(const LatticeHandle& L, const std::vector<IndexedVector>& B,
                     TermOrderSpec order, int test_bound, const Budget& budget) {
    require_finite_fibers(L, budget);
    const std::vector<IndexedVector> graver_moves = graver_basis(L, budget).elements;
    const std::set<IndexedVector, CanonicalLess> move_set(B.begin(), B.end());

    std::set<IndexedVector, CanonicalLess> done;
    for (const auto& u : enumerate_nonneg(L.shape(), test_bound)) {
        if (done.count(u)) continue;
        const FiberGraph f = fiber_with_moves(L, u, graver_moves, budget);
        for (const auto& v : f.vertices) done.insert(v);

        const IndexedVector* minimum = &f.vertices.front();
        for (const auto& v : f.vertices)
            if (term_compare(order, v, *minimum) < 0) minimum = &v;

        // Reverse reachability: which vertices reach the minimum along
        // directed edges (larger -> smaller, difference in +-B)?
        std::set<IndexedVector, CanonicalLess> reaches{*minimum};
        bool grew = true;
        while (grew) {
            grew = false;
            for (const auto& v : f.vertices) {
                if (reaches.count(v)) continue;
                for (const auto& w : f.vertices) {
                    if (!reaches.count(w)) continue;
                    if (term_compare(order, w, v) < 0 && is_move(v - w, move_set)) {
                        reaches.insert(v);
                        grew = true;
                        break;
                    }
                }
            }
        }
        for (const auto& v : f.vertices)
            if (v.norm() <= test_bound && !reaches.count(v)) return false;
    }
    return true;
}

bool generating_set_check(const LatticeHandle& L, const std::vector<IndexedVector>& B) {
    return LatticeHandle(L.shape(), B).same_lattice(L);
}

// --- Structural elements (d = c = 1) --------------------------------------

namespace {

void require_line_shape(const LatticeHandle& L, const char* who) {
    if (L.shape().d != 1 || L.shape().c != 1)
        throw ShapeError(std::string(who) + ": requires d = 1, c = 1");
}

}  // namespace

std::optional<IndexedVector> gl_element(const LatticeHandle& L) {
    require_line_shape(L, "gl_element");
    if (L.is_zero()) return std::nullopt;
    if (L.shape().n < 2) throw ShapeError("gl_element: needs level n >= 2");
    Int g = 0;
    for (const auto& b : L.generators())
        for (const auto& [idx, v] : b.entries()) g = gcd(g, v);
    IndexedVector r(L.shape());
    r.set({1, 1}, g);
    r.set({2, 1}, -g);
    if (!L.member(r))
        throw ShapeError("gl_element: presentation is not Sym-invariant (membership failed)");
    return r;
}

IndexedVector sl_element(const LatticeHandle& L) {
    require_line_shape(L, "sl_element");
    Int s = 0;
    for (const auto& b : L.generators()) {
        Int sum = 0;
        for (const auto& [idx, v] : b.entries()) sum += v;
        s = gcd(s, sum);
    }
    IndexedVector r(L.shape());
    if (s == 0) return r;  // zero marker
    r.set({1, 1}, s);
    if (!L.member(r))
        throw ShapeError("sl_element: presentation is not Sym-invariant (membership failed)");
    // Conformal minimality: no smaller positive multiple of e_1 may lie in
    // the lattice.
    for (Int z = 1; z < s; ++z) {
        IndexedVector candidate(L.shape());
        candidate.set({1, 1}, z);
        if (L.member(candidate))
            throw ShapeError("sl_element: minimality violated; presentation inconsistent");
    }
    return r;
}

bool thm_graver_envelope_check(const LatticeHandle& L, const Budget& budget) {
    require_line_shape(L, "thm_graver_envelope_check");
    if (L.is_zero()) return true;
    const BasisReport graver = graver_basis(L, budget);
    std::set<IndexedVector, CanonicalLess> graver_set(graver.elements.begin(),
                                                      graver.elements.end());
    const int n = L.shape().n;

    std::vector<IndexedVector> envelope_seeds;
    for (const auto& v : graver.elements)
        if (v.is_nonnegative()) {
            envelope_seeds.push_back(v);
            envelope_seeds.push_back(-v);
        }
    // Sym(n)(+-H) must sit inside the computed basis.
    for (const auto& h : envelope_seeds)
        for (const auto& img : orbit(h, n, budget))
            if (!graver_set.count(img)) return false;

    if (L.shape().n >= 2) {
        if (const auto g = gl_element(L)) {
            envelope_seeds.push_back(*g);
            envelope_seeds.push_back(-*g);
        }
    }
    std::set<IndexedVector, CanonicalLess> envelope;
    for (const auto& h : envelope_seeds)
        for (auto& img : orbit(h, n, budget)) envelope.insert(std::move(img));
    for (const auto& v : graver.elements)
        if (!envelope.count(v)) return false;
    return true;
}

}  // namespace equilat
