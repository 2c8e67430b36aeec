#pragma once

#include <map>
#include <vector>

#include "equilat/chains.hpp"
#include "equilat/lattice.hpp"
#include "equilat/matrix.hpp"

namespace equilat {

// Cell of a contingency table: one 1-based state per model coordinate.
using Cell = std::vector<int>;

// Simplicial complex on [m], given by its facets.  Facets must be
// nonempty, within range and pairwise inclusion-incomparable.
struct SimplicialComplex {
    int m = 0;
    std::vector<std::vector<int>> facets;

    SimplicialComplex() = default;
    SimplicialComplex(int m_, std::vector<std::vector<int>> facets_);
};

struct HierModel {
    SimplicialComplex complex;
    std::vector<int> levels;  // levels[i-1] = number of states of coordinate i

    HierModel() = default;
    HierModel(SimplicialComplex complex_, std::vector<int> levels_);

    std::int64_t cell_count() const;
};

// All cells in lexicographic order (last coordinate fastest).
std::vector<Cell> model_cells(const HierModel& model, const Budget& budget = {});

// 0/1 matrix with one row per (facet, marginal cell) pair and one column
// per cell, in the given column order; entry 1 iff the cell restricts to
// the row's marginal cell.
IntMatrix marginal_matrix(const HierModel& model, const std::vector<Cell>& columns);
IntMatrix marginal_matrix(const HierModel& model, const Budget& budget = {});

// Kernel of the marginal map under a flat labeling (d = 1, n = 1, all cells
// folded into the bounded coordinate, lexicographic cell order).
LatticeHandle kernel_lattice(const HierModel& model, const Budget& budget = {});

// Varying-coordinate regime: the coordinates in T run over [n] while the
// rest stay fixed.  T must meet every facet at most once; refused otherwise.
struct IndependentSetScenario {
    HierModel base;                 // levels of T coordinates are placeholders
    std::vector<int> T;             // ascending, nonempty
    std::map<int, int> fixed;       // coordinate -> fixed level, complement of T

    IndependentSetScenario(SimplicialComplex complex, std::vector<int> T_,
                           std::map<int, int> fixed_);
};

// Bijection between model cells at level n and [n]^d x [c]: T-coordinates
// become the unbounded slots in ascending T order; the fixed coordinates
// fold into the bounded coordinate by mixed radix, most significant first
// (smallest model coordinate).
struct ScenarioShape {
    IndexShape shape;
    std::vector<int> T;
    std::vector<int> fixed_coords;  // ascending
    std::vector<int> fixed_levels;  // aligned with fixed_coords

    IndexTuple cell_to_index(const Cell& cell) const;
    Cell index_to_cell(const IndexTuple& idx) const;
};

ScenarioShape scenario_shape(const IndependentSetScenario& s, int n);

HierModel instantiate(const IndependentSetScenario& s, int n);

// Kernel of the level-n marginal map over the scenario's identification.
LatticeHandle kernel_lattice(const IndependentSetScenario& s, int n, const Budget& budget = {});

// Chain n |-> kernel_lattice(s, n); generated per level.
ChainSpec scenario_chain(const IndependentSetScenario& s, const Budget& budget = {});

// The no-3-way interaction complex {{1,2},{1,3},{2,3}} with levels
// (n, n, c).  The two varying coordinates form a facet, so this is not an
// IndependentSetScenario; the cells are identified with [n]^2 x [c]
// directly.
LatticeHandle no3way_kernel(int n, int c, const Budget& budget = {});
ChainSpec no3way_chain(int c, const Budget& budget = {});

// The alternating cycle move every Markov basis of the level-n no-3-way
// kernel must contain; support size 4n.  Membership in the kernel is
// asserted.  Requires n >= 2, c >= 2.
IndexedVector no3way_witness(int n, int c, const Budget& budget = {});

}  // namespace equilat
