#pragma once

#include <json.hpp>

#include "equilat/bases.hpp"
#include "equilat/chains.hpp"
#include "equilat/models.hpp"
#include "equilat/perm.hpp"

// Canonical JSON forms.  A vector serializes as
//   {"shape":{"d":..,"c":..,"n":..},"entries":[[[i_1..i_d,j],value],...]}
// with entries sorted by basis_index_compare.  Values that fit in 64 bits
// are emitted as numbers, larger ones as decimal strings; both are
// accepted on input.  Parsing failures raise ShapeError.

namespace equilat {

using json = nlohmann::json;

json to_json(const Int& v);
Int int_from_json(const json& j);

json to_json(const IndexShape& s);
IndexShape shape_from_json(const json& j);

json entries_to_json(const IndexedVector& u);
json to_json(const IndexedVector& u);
IndexedVector vector_from_json(const json& j);
IndexedVector vector_from_entries(const IndexShape& shape, const json& entries);

json to_json(const LatticeHandle& L);
LatticeHandle lattice_from_json(const json& j);

json to_json(const PermutationWord& p);
PermutationWord permutation_from_json(const json& j);

json to_json(const TermOrderSpec& o);
TermOrderSpec order_from_json(const json& j);

json to_json(const BasisReport& r);

json to_json(const FiberGraph& f);

json to_json(const StabilizationWitness& w);
json to_json(const ScanResult& r, bool probed_mode);

json to_json(const HierModel& m);
HierModel model_from_json(const json& j);
IndependentSetScenario scenario_from_json(const json& j);
bool json_has_scenario(const json& j);

// Chain spec: {"d":..,"c":..,"seed":[entries..],"seed_n":..,"mode":"span"|"saturated-probe"}
// or a model/scenario document, which yields a per-level kernel chain.
ChainSpec chain_from_json(const json& j, const Budget& budget = {});

}  // namespace equilat
