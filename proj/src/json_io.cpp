#include "equilat/json_io.hpp"

#include <algorithm>

namespace equilat {

json to_json(const Int& v) {
    if (v.fits_slong_p()) return json(static_cast<std::int64_t>(v.get_si()));
    return json(v.get_str());
}

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) return Int(j.get<std::string>());
    throw ShapeError("expected an integer (number or decimal string)");
}

json to_json(const IndexShape& s) { return json{{"d", s.d}, {"c", s.c}, {"n", s.n}}; }

IndexShape shape_from_json(const json& j) {
    if (!j.is_object() || !j.contains("d") || !j.contains("c") || !j.contains("n"))
        throw ShapeError("shape: expected {\"d\":..,\"c\":..,\"n\":..}");
    return IndexShape(j.at("d").get<int>(), j.at("c").get<int>(), j.at("n").get<int>());
}

json entries_to_json(const IndexedVector& u) {
    json entries = json::array();
    for (const auto& [idx, v] : u.entries()) entries.push_back(json::array({json(idx), to_json(v)}));
    return entries;
}

json to_json(const IndexedVector& u) {
    return json{{"shape", to_json(u.shape())}, {"entries", entries_to_json(u)}};
}

IndexedVector vector_from_entries(const IndexShape& shape, const json& entries) {
    if (!entries.is_array()) throw ShapeError("vector entries: expected an array");
    IndexedVector u(shape);
    for (const auto& e : entries) {
        if (!e.is_array() || e.size() != 2 || !e.at(0).is_array())
            throw ShapeError("vector entry: expected [[i..,j],value]");
        IndexTuple idx = e.at(0).get<IndexTuple>();
        u.add(idx, int_from_json(e.at(1)));
    }
    return u;
}

IndexedVector vector_from_json(const json& j) {
    if (!j.is_object() || !j.contains("shape") || !j.contains("entries"))
        throw ShapeError("vector: expected {\"shape\":..,\"entries\":..}");
    return vector_from_entries(shape_from_json(j.at("shape")), j.at("entries"));
}

json to_json(const LatticeHandle& L) {
    json gens = json::array();
    for (const auto& g : L.generators()) gens.push_back(entries_to_json(g));
    return json{{"shape", to_json(L.shape())}, {"generators", gens}};
}

LatticeHandle lattice_from_json(const json& j) {
    if (!j.is_object() || !j.contains("shape") || !j.contains("generators"))
        throw ShapeError("lattice: expected {\"shape\":..,\"generators\":..}");
    const IndexShape shape = shape_from_json(j.at("shape"));
    std::vector<IndexedVector> gens;
    for (const auto& e : j.at("generators")) gens.push_back(vector_from_entries(shape, e));
    return LatticeHandle(shape, std::move(gens));
}

json to_json(const PermutationWord& p) { return json(p.images()); }

PermutationWord permutation_from_json(const json& j) {
    if (!j.is_array()) throw ShapeError("permutation: expected an image array");
    return PermutationWord(j.get<std::vector<int>>());
}

json to_json(const TermOrderSpec& o) {
    switch (o.kind) {
        case TermOrderKind::lex: return json("lex");
        case TermOrderKind::dlex: return json("dlex");
        case TermOrderKind::revlex: return json("revlex");
    }
    return json("?");
}

TermOrderSpec order_from_json(const json& j) {
    const std::string s = j.get<std::string>();
    TermOrderSpec o;
    if (s == "lex")
        o.kind = TermOrderKind::lex;
    else if (s == "dlex")
        o.kind = TermOrderKind::dlex;
    else if (s == "revlex")
        o.kind = TermOrderKind::revlex;
    else
        throw ShapeError("order: expected lex, dlex or revlex");
    return o;
}

json to_json(const BasisReport& r) {
    json elements = json::array();
    for (const auto& v : r.elements) elements.push_back(entries_to_json(v));
    json reps = json::array();
    for (const auto& v : r.representatives)
        reps.push_back(json{{"level", v.shape().n}, {"entries", entries_to_json(v)}});
    json certificate{{"pairs_processed", r.certificate.pairs_processed},
                     {"elements_peak", r.certificate.elements_peak},
                     {"budget_ok", r.certificate.budget_ok}};
    if (r.certificate.bound >= 0) certificate["bound"] = r.certificate.bound;
    json out{{"kind", basis_kind_name(r.kind)},
             {"element_count", elements.size()},
             {"elements", elements},
             {"orbit_representatives", reps},
             {"certificate", certificate}};
    out["order"] = r.order ? to_json(*r.order) : json(nullptr);
    return out;
}

json to_json(const FiberGraph& f) {
    json vertices = json::array();
    for (const auto& v : f.vertices) vertices.push_back(entries_to_json(v));
    return json{{"root", to_json(f.root)}, {"vertices", vertices}};
}

json to_json(const StabilizationWitness& w) {
    json reps = json::array();
    for (const auto& v : w.representatives)
        reps.push_back(json{{"level", v.shape().n}, {"entries", entries_to_json(v)}});
    return json{{"kind", scan_kind_name(w.kind)},
                {"level", w.level},
                {"representatives", reps},
                {"confirmed_through", w.confirmed_through},
                {"support_bound", w.support_bound},
                {"theorem_backed", w.theorem_backed},
                {"note", "finite-window witness, not a proof"}};
}

json to_json(const ScanResult& r, bool probed_mode) {
    json levels = json::array();
    for (const auto& lv : r.levels) {
        json reps = json::array();
        for (const auto& v : lv.representatives)
            reps.push_back(json{{"level", v.shape().n}, {"entries", entries_to_json(v)}});
        levels.push_back(json{{"n", lv.n}, {"representatives", reps}});
    }
    json out{{"witness", r.witness ? to_json(*r.witness) : json(nullptr)}, {"levels", levels}};
    if (probed_mode) out["truncation"] = "saturated-probe";
    return out;
}

json to_json(const HierModel& m) {
    return json{{"m", m.complex.m}, {"facets", m.complex.facets}, {"r", m.levels}};
}

HierModel model_from_json(const json& j) {
    if (!j.is_object() || !j.contains("m") || !j.contains("facets") || !j.contains("r"))
        throw ShapeError("model: expected {\"m\":..,\"facets\":..,\"r\":..}");
    SimplicialComplex complex(j.at("m").get<int>(),
                              j.at("facets").get<std::vector<std::vector<int>>>());
    return HierModel(std::move(complex), j.at("r").get<std::vector<int>>());
}

bool json_has_scenario(const json& j) { return j.is_object() && j.contains("T"); }

IndependentSetScenario scenario_from_json(const json& j) {
    if (!j.is_object() || !j.contains("m") || !j.contains("facets") || !j.contains("T"))
        throw ShapeError("scenario: expected model fields plus \"T\" and \"fixed\"");
    SimplicialComplex complex(j.at("m").get<int>(),
                              j.at("facets").get<std::vector<std::vector<int>>>());
    std::map<int, int> fixed;
    if (j.contains("fixed"))
        for (const auto& [key, value] : j.at("fixed").items())
            fixed[std::stoi(key)] = value.get<int>();
    return IndependentSetScenario(std::move(complex), j.at("T").get<std::vector<int>>(),
                                  std::move(fixed));
}

ChainSpec chain_from_json(const json& j, const Budget& budget) {
    if (json_has_scenario(j)) return scenario_chain(scenario_from_json(j), budget);
    if (!j.is_object() || !j.contains("d") || !j.contains("c") || !j.contains("seed"))
        throw ShapeError("chain: expected {\"d\":..,\"c\":..,\"seed\":..,\"seed_n\":..,\"mode\":..}");
    ChainSpec spec;
    spec.d = j.at("d").get<int>();
    spec.c = j.at("c").get<int>();
    int seed_n = j.contains("seed_n") ? j.at("seed_n").get<int>() : 0;
    if (seed_n == 0) {
        // Infer the seed level from the largest unbounded coordinate used.
        seed_n = 1;
        for (const auto& vec : j.at("seed"))
            for (const auto& e : vec)
                for (int k = 0; k < spec.d; ++k)
                    seed_n = std::max(seed_n, e.at(0).at(k).get<int>());
    }
    const IndexShape shape(spec.d, spec.c, seed_n);
    for (const auto& e : j.at("seed")) spec.seed.push_back(vector_from_entries(shape, e));
    const std::string mode = j.contains("mode") ? j.at("mode").get<std::string>() : "span";
    if (mode == "span")
        spec.mode = ChainMode::span;
    else if (mode == "saturated-probe")
        spec.mode = ChainMode::saturated_probe;
    else
        throw ShapeError("chain: mode must be span or saturated-probe");
    return spec;
}

}  // namespace equilat
