#pragma once

#include <json.hpp>

#include "fcadi/arrows.hpp"
#include "fcadi/dismantle.hpp"
#include "fcadi/lattice.hpp"

namespace fcadi {

using Json = nlohmann::ordered_json;

Json concept_json(const FormalContext& ctx, const Bitset& extent, const Bitset& intent);
Json concepts_json(const ConceptLattice& lat);

// {"intervals":[{"object":..,"attribute":..,"u":{..},"v":{..},"size":N}]}
// sorted by (object, attribute) label order.
Json intervals_json(const DismantlingIntervals& found, const ConceptLattice& reduced_lattice);

// {"steps":[{"u":{..},"v":{..},"members":N}],"core_concepts":N,
//  "core_standard_context":"<.cxt payload>"}
Json trace_json(const RemovalTrace& trace, const ConceptLattice& lat);

Json arrows_json(const FormalContext& ctx, const ArrowTable& table);

}  // namespace fcadi
