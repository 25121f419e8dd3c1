#include "fcadi/serialize.hpp"

#include "fcadi/io.hpp"

namespace fcadi {

Json concept_json(const FormalContext& ctx, const Bitset& extent, const Bitset& intent) {
  Json j;
  j["extent"] = ctx.object_labels(extent);
  j["intent"] = ctx.attribute_labels(intent);
  return j;
}

Json concepts_json(const ConceptLattice& lat) {
  Json j;
  j["count"] = lat.concepts.size();
  Json list = Json::array();
  for (const FormalConcept& c : lat.concepts) {
    list.push_back(concept_json(lat.context, c.extent, c.intent));
  }
  j["concepts"] = std::move(list);
  return j;
}

Json intervals_json(const DismantlingIntervals& found, const ConceptLattice& reduced_lattice) {
  Json list = Json::array();
  for (const GeneratorPair& p : found.pairs) {
    int u = reduced_lattice.gamma(p.object);
    int v = reduced_lattice.mu(p.attribute);
    Json entry;
    entry["object"] = p.object;
    entry["attribute"] = p.attribute;
    entry["u"] = concept_json(reduced_lattice.context, reduced_lattice.concepts[u].extent,
                              reduced_lattice.concepts[u].intent);
    entry["v"] = concept_json(reduced_lattice.context, reduced_lattice.concepts[v].extent,
                              reduced_lattice.concepts[v].intent);
    entry["size"] = reduced_lattice.order.interval_set(u, v).count();
    list.push_back(std::move(entry));
  }
  Json j;
  j["intervals"] = std::move(list);
  return j;
}

Json trace_json(const RemovalTrace& trace, const ConceptLattice& lat) {
  Json steps = Json::array();
  for (const RemovalStep& s : trace.steps) {
    Json step;
    step["u"] = concept_json(lat.context, lat.concepts[s.lower].extent,
                             lat.concepts[s.lower].intent);
    step["v"] = concept_json(lat.context, lat.concepts[s.upper].extent,
                             lat.concepts[s.upper].intent);
    step["members"] = s.members.size();
    steps.push_back(std::move(step));
  }
  Json j;
  j["steps"] = std::move(steps);
  j["core_concepts"] = trace.core.size();
  j["core_standard_context"] = to_cxt(trace.core_standard);
  return j;
}

Json arrows_json(const FormalContext& ctx, const ArrowTable& table) {
  auto cells = [&](auto pred) {
    Json list = Json::array();
    for (std::size_t g = 0; g < ctx.object_count(); ++g) {
      for (std::size_t m = 0; m < ctx.attribute_count(); ++m) {
        if (pred(g, m)) list.push_back(Json::array({ctx.objects[g], ctx.attributes[m]}));
      }
    }
    return list;
  };
  Json j;
  j["up"] = cells([&](std::size_t g, std::size_t m) { return table.up(g, m); });
  j["down"] = cells([&](std::size_t g, std::size_t m) { return table.down(g, m); });
  j["double"] = cells([&](std::size_t g, std::size_t m) { return table.both(g, m); });
  return j;
}

}  // namespace fcadi
