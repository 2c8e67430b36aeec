#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "equilat/bases.hpp"

namespace equilat {

enum class ChainMode {
    span,             // L_n = Z Sym(n)(seed)
    saturated_probe,  // L_n ~= (limit of spans) cap Z^(I_n), by stabilized intersection
    per_level,        // L_n supplied by a callback (e.g. model kernels)
};

// A Sym-invariant chain of lattices, described by seed vectors or a
// per-level constructor.
struct ChainSpec {
    int d = 1;
    int c = 1;
    std::vector<IndexedVector> seed;  // nonempty unless per_level
    ChainMode mode = ChainMode::span;
    std::function<LatticeHandle(int)> level = nullptr;  // per_level only

    int seed_level() const;
};

struct TruncationResult {
    LatticeHandle lattice;
    // saturated_probe metadata: the probe degree at which two consecutive
    // intersections coincided.  The equality beyond that degree is a
    // finite-window observation, not a proof.
    int probe_degree = 0;
    bool probed = false;
};

// Level-n member of the chain.  In span mode: the invariant span of the
// seed orbits (computed by transposition closure of the HNF basis, which
// avoids materializing orbits).  In saturated_probe mode: intersections of
// higher spans with level n, probed until two consecutive degrees agree.
TruncationResult truncation(const ChainSpec& spec, int n, const Budget& budget = {});

enum class ScanKind { generating, markov, graver, groebner_lex, groebner_dlex, groebner_revlex };

const char* scan_kind_name(ScanKind k);
// Only graver, markov and generating witnesses ride on stabilization
// theorems; lex-Groebner partially, dlex/revlex not at all.
bool scan_kind_theorem_backed(ScanKind k);

struct StabilizationWitness {
    ScanKind kind = ScanKind::graver;
    int level = 0;                            // first level of the stable window
    std::vector<IndexedVector> representatives;
    int confirmed_through = 0;                // last level checked equal
    int support_bound = 0;                    // max support size among representatives
    bool theorem_backed = false;
};

struct ScanLevel {
    int n = 0;
    std::vector<IndexedVector> representatives;
};

struct ScanResult {
    std::optional<StabilizationWitness> witness;
    std::vector<ScanLevel> levels;
};

// Walks n = seed level .. n_max, computes the level basis of the requested
// kind (generating: HNF rows; markov/graver: the Graver basis, with the
// finite-fiber certificate demanded for markov; groebner_*: the reduced
// basis for that order), maps elements to small-support representatives and
// reports the first level whose representative set repeats for `window`
// consecutive levels.  Stops early once a window is confirmed.  A witness
// is a finite-window observation, never a proof.
ScanResult stabilization_scan(const ChainSpec& spec, ScanKind kind, int n_max, int window,
                              const Budget& budget = {});

// reduce_width + canonical_form representative of each basis element;
// basis is contained in the Sym(n)-orbits of the output.  Throws when an
// element's support is too wide for the level.
std::vector<IndexedVector> equivariant_basis_extract(const LatticeHandle& L_n,
                                                     const std::vector<IndexedVector>& basis,
                                                     const Budget& budget = {});

// Max support size over elements.
int support_bound_report(const std::vector<IndexedVector>& basis);

}  // namespace equilat
