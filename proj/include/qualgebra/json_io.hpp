#pragma once

#include <json.hpp>

#include "qualgebra/builtins.hpp"
#include "qualgebra/classify.hpp"
#include "qualgebra/cohomology.hpp"
#include "qualgebra/coloring.hpp"
#include "qualgebra/diagram.hpp"
#include "qualgebra/invariants.hpp"

namespace qlab {

using json = nlohmann::json;

// {"kind":"qualgebra","n":4,"names":[...],"lhd":[[...]],"diamond":[[...]]}
// squandle: "square":[...]; group: "mul","unit","inv"; quandle: "lhd" only.
json to_json(const any_structure& s);
any_structure structure_from_json(const json& j);

// {"arcs":[...],"crossings":[{"sign":"+","over":...,"under_in":...,
//  "under_out":...}],"vertices":[{"kind":"zip","in_left":...,...}],
//  "free_loops":0,"boundary":{"inputs":[...],"outputs":[...]}}
json to_json(const diagram& d);
diagram diagram_from_json(const json& j);

// {"kind":"qualgebra","n":4,"chi":[[...]],"lambda":[[...]]}; squandle lambda
// is a flat list. Entries outside int64 range are serialized as decimal
// strings.
json to_json(const cocycle_pair& cp);
cocycle_pair cocycle_from_json(const json& j);

json to_json(const coloring& c);
json to_json(const abelian_group_presentation& g);
json to_json(const cohomology_result& r);
json to_json(const property_report_t& r, const carrier& base);
json to_json(const classification_result& r);
json to_json(const weight_multiset& w);

}  // namespace qlab
