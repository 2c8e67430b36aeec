#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "equilat/lattice.hpp"
#include "equilat/order.hpp"

namespace equilat {

enum class BasisKind {
    generating,
    markov,
    groebner,
    universal_groebner_candidate,
    graver,
    hilbert,
};

const char* basis_kind_name(BasisKind k);

// Verification metadata attached to a computed basis.
struct Certificate {
    std::int64_t pairs_processed = 0;
    std::int64_t elements_peak = 0;
    int bound = -1;  // norm bound, where one applies
    bool budget_ok = true;
};

struct BasisReport {
    BasisKind kind = BasisKind::graver;
    std::vector<IndexedVector> elements;  // canonically sorted, pairwise distinct
    std::optional<TermOrderSpec> order;
    // Small-support orbit representatives of the elements, when every
    // element is narrow enough to shift; empty otherwise.
    std::vector<IndexedVector> representatives;
    Certificate certificate;
};

// A fully enumerated finite fiber together with the move set that built it.
struct FiberGraph {
    IndexedVector root;
    std::vector<IndexedVector> vertices;  // canonically sorted; contains root
    std::vector<IndexedVector> moves;
};

// --- Graver / Hilbert ----------------------------------------------------

// Pair-completion with conformal normal forms: G starts as the generators
// and their negations; sums of queued pairs are conformally reduced against
// G and surviving normal forms join G; at the fixpoint the conformally
// minimal elements are exactly the nonzero conformally minimal lattice
// elements.
BasisReport graver_basis(const LatticeHandle& L, const Budget& budget = {});

// Independent brute force: conformally minimal members of lattice_ball.
// Agrees with graver_basis below `bound` whenever the basis fits there.
std::vector<IndexedVector> graver_oracle(const LatticeHandle& L, int bound,
                                         const Budget& budget = {});

// Hilbert basis of L cap Z_{>=0}: the nonnegative Graver members; equals
// the irreducible elements of the monoid.
BasisReport hilbert_basis(const LatticeHandle& L, const Budget& budget = {});

// --- Lawrence doubling ---------------------------------------------------

// The preimage lattice of L under (u, v) |-> u - v in the doubled shape
// (c -> 2c): generated by {(b, 0)} for generators b and the diagonal units
// {(e_i, e_i)}.
LatticeHandle lawrence_lift(const LatticeHandle& L);

// (u, v) |-> u - v back to the single shape.
IndexedVector lawrence_project(const IndexedVector& w);

// Both directions of the Graver/Hilbert correspondence through the lift:
// the Graver basis equals the projected lifted Hilbert basis (zero dropped),
// and the lifted Hilbert basis is exactly the sign-split pairs plus the
// diagonal units.
bool hilbert_graver_crosscheck(const LatticeHandle& L, const Budget& budget = {});

// --- Groebner ------------------------------------------------------------

// Directed lattice vector: plus side strictly after minus side under a
// fixed term order.
struct DirectedVector {
    IndexedVector vector;

    static DirectedVector orient(const IndexedVector& v, TermOrderSpec order);
    IndexedVector plus() const { return sign_split(vector).plus; }
    IndexedVector minus() const { return sign_split(vector).minus; }
};

// Exponent pair of a binomial; common factors are allowed mid-reduction.
struct MonomialPair {
    IndexedVector a;
    IndexedVector b;
};

// Vector-level Buchberger seeded from the handle's generators: overlap
// monomials of oriented pairs are rewritten to normal form on both sides,
// differences of distinct normal forms join the basis.  The fixpoint is
// minimized and tail-reduced, so the output is the reduced basis of the
// rewriting system the generators define.  The congruence it decides is
// that of the generator set: present the lattice by a Markov basis (the
// Graver basis always qualifies) to obtain a certified basis for the full
// lattice congruence; verify_groebner checks exactly that.
BasisReport groebner_basis(const LatticeHandle& L, TermOrderSpec order,
                           const Budget& budget = {});

// Every nonnegative u with |u| <= test_bound reaches the order-minimum of
// its fiber along a directed B-path.  Requires the finite-fiber
// certificate; refuses (RefusalError) otherwise.
bool verify_groebner(const LatticeHandle& L, const std::vector<IndexedVector>& B,
                     TermOrderSpec order, int test_bound, const Budget& budget = {});

// --- Fibers / Markov -----------------------------------------------------

// The full fiber {v >= 0 : u - v in L}, enumerated by closing u under
// Graver moves while staying nonnegative.  Requires L cap Z_{>=0} = {0}
// (certified by an empty Hilbert basis), which makes every fiber finite;
// refuses otherwise.
FiberGraph fiber(const LatticeHandle& L, const IndexedVector& u, const Budget& budget = {});

// As `fiber`, but with the move set supplied by the caller (it must be a
// certified Markov superset, e.g. a Graver basis computed once).
FiberGraph fiber_with_moves(const LatticeHandle& L, const IndexedVector& u,
                            const std::vector<IndexedVector>& graver_moves,
                            const Budget& budget = {});

// G(u, B) is connected for every nonnegative u with |u| <= test_bound.
// When quotient_by_symmetry is set, starting points are deduplicated by
// canonical form (valid for Sym(n)-invariant lattices).
bool verify_markov(const LatticeHandle& L, const std::vector<IndexedVector>& B,
                   int test_bound, const Budget& budget = {},
                   bool quotient_by_symmetry = false);

// The integer span of B equals L (HNF equality).
bool generating_set_check(const LatticeHandle& L, const std::vector<IndexedVector>& B);

// --- Structural elements (d = c = 1) -------------------------------------

// g_L * (e_1 - e_2) where g_L is the gcd over generators of their entry
// gcds.  Requires a Sym-invariant presentation at level n >= 2, under which
// the element is a lattice member (asserted).  nullopt for the zero lattice.
std::optional<IndexedVector> gl_element(const LatticeHandle& L);

// s_L * e_1 with s_L the gcd of the generators' coordinate sums; membership
// and conformal minimality are asserted when s_L != 0.  Returns the zero
// vector when every coordinate sum vanishes.
IndexedVector sl_element(const LatticeHandle& L);

// Sym(n)(+-H) subset G subset Sym(n)(+-H cup {+-g_L}) for the computed
// Graver basis G and its nonnegative part H.
bool thm_graver_envelope_check(const LatticeHandle& L, const Budget& budget = {});

// --- helpers shared by the verification ops ------------------------------

// All nonnegative vectors of the shape with norm <= bound, canonically
// sorted.
std::vector<IndexedVector> enumerate_nonneg(const IndexShape& shape, int bound);

// Small-support orbit representatives for a basis: reduce_width followed by
// canonical_form at the minimal level each element fits in; deduplicated.
// Elements too wide for their level are canonicalized unshifted.
std::vector<IndexedVector> basis_representatives(const std::vector<IndexedVector>& elements,
                                                 const IndexShape& shape,
                                                 const Budget& budget = {});

}  // namespace equilat
