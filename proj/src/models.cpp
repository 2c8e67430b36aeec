#include "equilat/models.hpp"

#include <algorithm>

namespace equilat {

SimplicialComplex::SimplicialComplex(int m_, std::vector<std::vector<int>> facets_)
    : m(m_), facets(std::move(facets_)) {
    if (m < 1) throw ShapeError("SimplicialComplex: ground set must be nonempty");
    for (auto& f : facets) {
        if (f.empty()) throw ShapeError("SimplicialComplex: empty facet");
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        for (int v : f)
            if (v < 1 || v > m) throw ShapeError("SimplicialComplex: facet outside ground set");
    }
    for (size_t i = 0; i < facets.size(); ++i)
        for (size_t j = 0; j < facets.size(); ++j) {
            if (i == j) continue;
            if (std::includes(facets[j].begin(), facets[j].end(), facets[i].begin(),
                              facets[i].end()))
                throw ShapeError("SimplicialComplex: facets must be inclusion-incomparable");
        }
}

HierModel::HierModel(SimplicialComplex complex_, std::vector<int> levels_)
    : complex(std::move(complex_)), levels(std::move(levels_)) {
    if (static_cast<int>(levels.size()) != complex.m)
        throw ShapeError("HierModel: level vector length mismatch");
    for (int r : levels)
        if (r < 1) throw ShapeError("HierModel: levels must be positive");
}

std::int64_t HierModel::cell_count() const {
    std::int64_t count = 1;
    for (int r : levels) count *= r;
    return count;
}

std::vector<Cell> model_cells(const HierModel& model, const Budget& budget) {
    if (model.cell_count() > budget.cell_cap)
        throw BudgetError("model_cells: cell budget exceeded");
    std::vector<Cell> cells;
    cells.reserve(static_cast<size_t>(model.cell_count()));
    Cell cur(model.levels.size(), 1);
    for (;;) {
        cells.push_back(cur);
        int k = static_cast<int>(cur.size()) - 1;
        for (;;) {
            if (k < 0) break;
            if (++cur[k] <= model.levels[k]) break;
            cur[k] = 1;
            --k;
        }
        if (k < 0) break;
    }
    return cells;
}

IntMatrix marginal_matrix(const HierModel& model, const std::vector<Cell>& columns) {
    // Rows: facets in input order; marginal cells of each facet in
    // lexicographic order.
    struct RowBlock {
        std::vector<int> facet;
        std::vector<Cell> marginal_cells;
    };
    std::vector<RowBlock> blocks;
    int rows = 0;
    for (const auto& facet : model.complex.facets) {
        RowBlock b;
        b.facet = facet;
        Cell cur(facet.size(), 1);
        for (;;) {
            b.marginal_cells.push_back(cur);
            int k = static_cast<int>(cur.size()) - 1;
            for (;;) {
                if (k < 0) break;
                if (++cur[k] <= model.levels[facet[k] - 1]) break;
                cur[k] = 1;
                --k;
            }
            if (k < 0) break;
        }
        rows += static_cast<int>(b.marginal_cells.size());
        blocks.push_back(std::move(b));
    }
    IntMatrix m(rows, static_cast<int>(columns.size()));
    int row = 0;
    for (const auto& b : blocks) {
        for (const auto& mc : b.marginal_cells) {
            for (size_t col = 0; col < columns.size(); ++col) {
                bool match = true;
                for (size_t t = 0; t < b.facet.size() && match; ++t)
                    match = columns[col][b.facet[t] - 1] == mc[t];
                if (match) m(row, static_cast<int>(col)) = 1;
            }
            ++row;
        }
    }
    return m;
}

IntMatrix marginal_matrix(const HierModel& model, const Budget& budget) {
    return marginal_matrix(model, model_cells(model, budget));
}

namespace {

LatticeHandle kernel_from_columns(const HierModel& model, const IndexShape& shape,
                                  const std::vector<Cell>& columns,
                                  const std::vector<IndexTuple>& column_tuples) {
    const IntMatrix m = marginal_matrix(model, columns);
    std::vector<IndexedVector> gens;
    for (const auto& x : kernel_basis(m)) {
        IndexedVector u(shape);
        for (size_t k = 0; k < column_tuples.size(); ++k)
            if (x[k] != 0) u.set(column_tuples[k], x[k]);
        gens.push_back(std::move(u));
    }
    return LatticeHandle(shape, std::move(gens));
}

}  // namespace

LatticeHandle kernel_lattice(const HierModel& model, const Budget& budget) {
    const std::vector<Cell> cells = model_cells(model, budget);
    const IndexShape shape(1, static_cast<int>(cells.size()), 1);
    std::vector<IndexTuple> tuples;
    for (size_t j = 0; j < cells.size(); ++j) tuples.push_back({1, static_cast<int>(j) + 1});
    return kernel_from_columns(model, shape, cells, tuples);
}

IndependentSetScenario::IndependentSetScenario(SimplicialComplex complex, std::vector<int> T_,
                                               std::map<int, int> fixed_)
    : base(), T(std::move(T_)), fixed(std::move(fixed_)) {
    if (T.empty()) throw ShapeError("IndependentSetScenario: T must be nonempty");
    std::sort(T.begin(), T.end());
    T.erase(std::unique(T.begin(), T.end()), T.end());
    for (int t : T)
        if (t < 1 || t > complex.m)
            throw ShapeError("IndependentSetScenario: T outside ground set");
    for (const auto& [coord, level] : fixed) {
        if (coord < 1 || coord > complex.m)
            throw ShapeError("IndependentSetScenario: fixed coordinate outside ground set");
        if (std::binary_search(T.begin(), T.end(), coord))
            throw ShapeError("IndependentSetScenario: coordinate both varying and fixed");
        if (level < 1) throw ShapeError("IndependentSetScenario: fixed level must be positive");
    }
    if (static_cast<int>(T.size() + fixed.size()) != complex.m)
        throw ShapeError("IndependentSetScenario: T and fixed must partition the ground set");
    for (const auto& facet : complex.facets) {
        int hits = 0;
        for (int v : facet)
            if (std::binary_search(T.begin(), T.end(), v)) ++hits;
        if (hits > 1)
            throw RefusalError("IndependentSetScenario: T meets a facet more than once",
                               "non-independent-T");
    }
    std::vector<int> levels(complex.m, 1);
    for (const auto& [coord, level] : fixed) levels[coord - 1] = level;
    base = HierModel(std::move(complex), std::move(levels));
}

ScenarioShape scenario_shape(const IndependentSetScenario& s, int n) {
    if (n < 1) throw ShapeError("scenario_shape: level must be positive");
    ScenarioShape out;
    out.T = s.T;
    for (const auto& [coord, level] : s.fixed) {
        out.fixed_coords.push_back(coord);
        out.fixed_levels.push_back(level);
    }
    int c = 1;
    for (int level : out.fixed_levels) c *= level;
    out.shape = IndexShape(static_cast<int>(s.T.size()), c, n);
    return out;
}

IndexTuple ScenarioShape::cell_to_index(const Cell& cell) const {
    IndexTuple idx(T.size() + 1);
    for (size_t k = 0; k < T.size(); ++k) idx[k] = cell[T[k] - 1];
    int j = 0;
    for (size_t k = 0; k < fixed_coords.size(); ++k) j = j * fixed_levels[k] + (cell[fixed_coords[k] - 1] - 1);
    idx[T.size()] = j + 1;
    return idx;
}

Cell ScenarioShape::index_to_cell(const IndexTuple& idx) const {
    Cell cell(T.size() + fixed_coords.size());
    for (size_t k = 0; k < T.size(); ++k) cell[T[k] - 1] = idx[k];
    int j = idx[T.size()] - 1;
    for (size_t k = fixed_coords.size(); k-- > 0;) {
        cell[fixed_coords[k] - 1] = j % fixed_levels[k] + 1;
        j /= fixed_levels[k];
    }
    return cell;
}

HierModel instantiate(const IndependentSetScenario& s, int n) {
    std::vector<int> levels = s.base.levels;
    for (int t : s.T) levels[t - 1] = n;
    return HierModel(s.base.complex, std::move(levels));
}

LatticeHandle kernel_lattice(const IndependentSetScenario& s, int n, const Budget& budget) {
    const HierModel model = instantiate(s, n);
    const ScenarioShape sh = scenario_shape(s, n);
    std::vector<Cell> cells = model_cells(model, budget);
    std::sort(cells.begin(), cells.end(), [&](const Cell& a, const Cell& b) {
        return basis_index_compare(sh.cell_to_index(a), sh.cell_to_index(b)) < 0;
    });
    std::vector<IndexTuple> tuples;
    tuples.reserve(cells.size());
    for (const auto& cell : cells) tuples.push_back(sh.cell_to_index(cell));
    return kernel_from_columns(model, sh.shape, cells, tuples);
}

ChainSpec scenario_chain(const IndependentSetScenario& s, const Budget& budget) {
    ChainSpec spec;
    const ScenarioShape sh = scenario_shape(s, 1);
    spec.d = sh.shape.d;
    spec.c = sh.shape.c;
    spec.mode = ChainMode::per_level;
    spec.level = [s, budget](int n) { return kernel_lattice(s, n, budget); };
    return spec;
}

namespace {

const SimplicialComplex& no3way_complex() {
    static const SimplicialComplex delta(3, {{1, 2}, {1, 3}, {2, 3}});
    return delta;
}

}  // namespace

LatticeHandle no3way_kernel(int n, int c, const Budget& budget) {
    if (n < 1 || c < 1) throw ShapeError("no3way_kernel: levels must be positive");
    const HierModel model(no3way_complex(), {n, n, c});
    const IndexShape shape(2, c, n);
    std::vector<Cell> cells = model_cells(model, budget);
    // Cell (i1, i2, i3) is the index ((i1, i2), j = i3).
    auto to_tuple = [](const Cell& cell) { return IndexTuple{cell[0], cell[1], cell[2]}; };
    std::sort(cells.begin(), cells.end(), [&](const Cell& a, const Cell& b) {
        return basis_index_compare(to_tuple(a), to_tuple(b)) < 0;
    });
    std::vector<IndexTuple> tuples;
    tuples.reserve(cells.size());
    for (const auto& cell : cells) tuples.push_back(to_tuple(cell));
    return kernel_from_columns(model, shape, cells, tuples);
}

ChainSpec no3way_chain(int c, const Budget& budget) {
    ChainSpec spec;
    spec.d = 2;
    spec.c = c;
    spec.mode = ChainMode::per_level;
    spec.level = [c, budget](int n) { return no3way_kernel(n, c, budget); };
    return spec;
}

IndexedVector no3way_witness(int n, int c, const Budget& budget) {
    if (n < 2) throw ShapeError("no3way_witness: requires n >= 2");
    if (c < 2) throw ShapeError("no3way_witness: requires c >= 2");
    IndexedVector u(IndexShape(2, c, n));
    for (int i = 1; i <= n; ++i) {
        u.add({i, i, 1}, 1);
        u.add({i, i, 2}, -1);
    }
    for (int i = 1; i < n; ++i) {
        u.add({i, i + 1, 2}, 1);
        u.add({i, i + 1, 1}, -1);
    }
    u.add({n, 1, 2}, 1);
    u.add({n, 1, 1}, -1);
    if (!no3way_kernel(n, c, budget).member(u))
        throw ShapeError("no3way_witness: constructed element left the kernel");
    return u;
}

}  // namespace equilat
