#include "fcadi/context.hpp"

#include <algorithm>
#include <set>

#include "fcadi/lattice.hpp"

namespace fcadi {

FormalContext::FormalContext(std::vector<std::string> objs, std::vector<std::string> attrs,
                             const std::vector<std::pair<std::size_t, std::size_t>>& incidence)
    : objects(std::move(objs)), attributes(std::move(attrs)) {
  for (std::size_t g = 0; g < objects.size(); ++g) {
    if (!object_index_.emplace(objects[g], g).second) {
      throw InputError("duplicate object label: " + objects[g]);
    }
  }
  for (std::size_t m = 0; m < attributes.size(); ++m) {
    if (!attribute_index_.emplace(attributes[m], m).second) {
      throw InputError("duplicate attribute label: " + attributes[m]);
    }
  }
  rows.assign(objects.size(), Bitset(attributes.size()));
  cols.assign(attributes.size(), Bitset(objects.size()));
  for (const auto& [g, m] : incidence) {
    if (g >= objects.size() || m >= attributes.size()) {
      throw InputError("incidence pair out of range");
    }
    rows[g].set(m);
    cols[m].set(g);
  }
}

FormalContext FormalContext::from_labels(
    std::vector<std::string> objs, std::vector<std::string> attrs,
    const std::vector<std::pair<std::string, std::string>>& incidence) {
  FormalContext empty(std::move(objs), std::move(attrs), {});
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(incidence.size());
  for (const auto& [g, m] : incidence) {
    pairs.emplace_back(empty.object_index(g), empty.attribute_index(m));
  }
  return FormalContext(std::move(empty.objects), std::move(empty.attributes), pairs);
}

std::optional<std::size_t> FormalContext::find_object(std::string_view label) const {
  auto it = object_index_.find(std::string(label));
  if (it == object_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> FormalContext::find_attribute(std::string_view label) const {
  auto it = attribute_index_.find(std::string(label));
  if (it == attribute_index_.end()) return std::nullopt;
  return it->second;
}

std::size_t FormalContext::object_index(std::string_view label) const {
  auto i = find_object(label);
  if (!i) throw InputError("unknown object label: " + std::string(label));
  return *i;
}

std::size_t FormalContext::attribute_index(std::string_view label) const {
  auto i = find_attribute(label);
  if (!i) throw InputError("unknown attribute label: " + std::string(label));
  return *i;
}

Bitset FormalContext::derive_objects(const Bitset& objs) const {
  Bitset out = full_set(attribute_count());
  for (auto g = objs.find_first(); g != Bitset::npos; g = objs.find_next(g)) {
    out &= rows[g];
  }
  return out;
}

Bitset FormalContext::derive_attributes(const Bitset& attrs) const {
  Bitset out = full_set(object_count());
  for (auto m = attrs.find_first(); m != Bitset::npos; m = attrs.find_next(m)) {
    out &= cols[m];
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> FormalContext::incidence_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t g = 0; g < object_count(); ++g) {
    for (auto m = rows[g].find_first(); m != Bitset::npos; m = rows[g].find_next(m)) {
      out.emplace_back(g, m);
    }
  }
  return out;
}

Bitset FormalContext::object_set(const std::vector<std::string>& labels) const {
  Bitset out(object_count());
  for (const auto& l : labels) out.set(object_index(l));
  return out;
}

Bitset FormalContext::attribute_set(const std::vector<std::string>& labels) const {
  Bitset out(attribute_count());
  for (const auto& l : labels) out.set(attribute_index(l));
  return out;
}

std::vector<std::string> FormalContext::object_labels(const Bitset& objs) const {
  std::vector<std::string> out;
  for (auto g : set_bits(objs)) out.push_back(objects[g]);
  return out;
}

std::vector<std::string> FormalContext::attribute_labels(const Bitset& attrs) const {
  std::vector<std::string> out;
  for (auto m : set_bits(attrs)) out.push_back(attributes[m]);
  return out;
}

std::vector<std::string> derive_objects(const FormalContext& ctx,
                                        const std::vector<std::string>& objs) {
  return ctx.attribute_labels(ctx.derive_objects(ctx.object_set(objs)));
}

std::vector<std::string> derive_attributes(const FormalContext& ctx,
                                           const std::vector<std::string>& attrs) {
  return ctx.object_labels(ctx.derive_attributes(ctx.attribute_set(attrs)));
}

namespace {

// Indices to keep after merging equal vectors; fills removed->representative.
std::vector<std::size_t> dedup_by_vector(const std::vector<std::string>& labels,
                                         const std::vector<Bitset>& vecs,
                                         std::map<std::string, std::string>& merges) {
  std::map<Bitset, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < vecs.size(); ++i) groups[vecs[i]].push_back(i);
  std::vector<std::size_t> kept;
  for (const auto& [vec, members] : groups) {
    std::size_t rep = members.front();
    for (auto i : members) {
      if (labels[i] < labels[rep]) rep = i;
    }
    kept.push_back(rep);
    for (auto i : members) {
      if (i != rep) merges.emplace(labels[i], labels[rep]);
    }
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

FormalContext restrict_to(const FormalContext& ctx, const std::vector<std::size_t>& objs,
                          const std::vector<std::size_t>& attrs) {
  std::vector<std::string> olabels, alabels;
  olabels.reserve(objs.size());
  alabels.reserve(attrs.size());
  for (auto g : objs) olabels.push_back(ctx.objects[g]);
  for (auto m : attrs) alabels.push_back(ctx.attributes[m]);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t gi = 0; gi < objs.size(); ++gi) {
    for (std::size_t mi = 0; mi < attrs.size(); ++mi) {
      if (ctx.incident(objs[gi], attrs[mi])) pairs.emplace_back(gi, mi);
    }
  }
  return FormalContext(std::move(olabels), std::move(alabels), pairs);
}

std::vector<std::size_t> all_indices(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

}  // namespace

ClarifyResult clarify(const FormalContext& ctx, ClarifySide side) {
  ClarifyResult out;
  // Equality groups on either side are unaffected by merging the other side,
  // so both can be computed on the input.
  std::vector<std::size_t> kept_objs = all_indices(ctx.object_count());
  std::vector<std::size_t> kept_attrs = all_indices(ctx.attribute_count());
  if (side == ClarifySide::Objects || side == ClarifySide::Both) {
    kept_objs = dedup_by_vector(ctx.objects, ctx.rows, out.object_merges);
  }
  if (side == ClarifySide::Attributes || side == ClarifySide::Both) {
    kept_attrs = dedup_by_vector(ctx.attributes, ctx.cols, out.attribute_merges);
  }
  out.context = restrict_to(ctx, kept_objs, kept_attrs);
  return out;
}

ReduceResult reduce(const FormalContext& ctx) {
  ClarifyResult cl = clarify(ctx, ClarifySide::Both);
  const FormalContext& c = cl.context;

  // g is reducible iff its row equals the intersection of strictly larger
  // rows (the empty intersection being M, this drops full rows too).
  auto irreducible = [](const std::vector<Bitset>& vecs, std::size_t universe) {
    std::vector<bool> keep(vecs.size(), false);
    for (std::size_t i = 0; i < vecs.size(); ++i) {
      Bitset inter = full_set(universe);
      for (std::size_t j = 0; j < vecs.size(); ++j) {
        if (j != i && vecs[i].is_proper_subset_of(vecs[j])) inter &= vecs[j];
      }
      keep[i] = (inter != vecs[i]);
    }
    return keep;
  };

  std::vector<bool> keep_obj = irreducible(c.rows, c.attribute_count());
  std::vector<bool> keep_attr = irreducible(c.cols, c.object_count());

  std::vector<std::size_t> objs, attrs;
  std::set<std::string> gone_objs, gone_attrs;
  for (const auto& [removed, rep] : cl.object_merges) gone_objs.insert(removed);
  for (const auto& [removed, rep] : cl.attribute_merges) gone_attrs.insert(removed);
  for (std::size_t g = 0; g < c.object_count(); ++g) {
    if (keep_obj[g]) {
      objs.push_back(g);
    } else {
      gone_objs.insert(c.objects[g]);
    }
  }
  for (std::size_t m = 0; m < c.attribute_count(); ++m) {
    if (keep_attr[m]) {
      attrs.push_back(m);
    } else {
      gone_attrs.insert(c.attributes[m]);
    }
  }

  ReduceResult out;
  out.context = restrict_to(c, objs, attrs);
  for (const auto& l : ctx.objects) {
    if (gone_objs.count(l)) out.removed_objects.push_back(l);
  }
  for (const auto& l : ctx.attributes) {
    if (gone_attrs.count(l)) out.removed_attributes.push_back(l);
  }
  return out;
}

FormalContext subcontext(const FormalContext& ctx, const Bitset& objs, const Bitset& attrs) {
  std::vector<std::size_t> go, ga;
  for (auto g : set_bits(objs)) go.push_back(g);
  for (auto m : set_bits(attrs)) ga.push_back(m);
  return restrict_to(ctx, go, ga);
}

FormalContext subcontext(const FormalContext& ctx, const std::vector<std::string>& objs,
                         const std::vector<std::string>& attrs) {
  return subcontext(ctx, ctx.object_set(objs), ctx.attribute_set(attrs));
}

bool is_closed_subrelation(const FormalContext& ctx, const std::vector<LabelPair>& relation) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& [g, m] : relation) {
    std::size_t gi = ctx.object_index(g);
    std::size_t mi = ctx.attribute_index(m);
    if (!ctx.incident(gi, mi)) {
      throw InputError("relation is not a subset of the incidence: (" + g + ", " + m + ")");
    }
    pairs.emplace_back(gi, mi);
  }
  FormalContext sub(ctx.objects, ctx.attributes, pairs);
  ConceptLattice lat = enumerate_concepts(sub);
  for (const auto& c : lat.concepts) {
    if (ctx.derive_objects(c.extent) != c.intent) return false;
    if (ctx.derive_attributes(c.intent) != c.extent) return false;
  }
  return true;
}

bool is_closed_subcontext(const FormalContext& ctx, const SubcontextSpec& spec) {
  FormalContext sub = [&] {
    FormalContext shell(spec.objects, spec.attributes, {});
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (const auto& [g, m] : spec.relation) {
      auto gi = shell.find_object(g);
      auto mi = shell.find_attribute(m);
      if (!gi || !mi) {
        throw InputError("subcontext relation leaves H×N at (" + g + ", " + m + ")");
      }
      pairs.emplace_back(*gi, *mi);
    }
    return FormalContext(spec.objects, spec.attributes, pairs);
  }();

  std::vector<std::size_t> obj_map, attr_map;
  for (const auto& l : spec.objects) obj_map.push_back(ctx.object_index(l));
  for (const auto& l : spec.attributes) attr_map.push_back(ctx.attribute_index(l));

  // J must sit inside I ∩ (H×N).
  for (std::size_t g = 0; g < sub.object_count(); ++g) {
    for (auto m = sub.rows[g].find_first(); m != Bitset::npos; m = sub.rows[g].find_next(m)) {
      if (!ctx.incident(obj_map[g], attr_map[m])) return false;
    }
  }

  ConceptLattice lat = enumerate_concepts(sub);
  for (const auto& c : lat.concepts) {
    Bitset extent(ctx.object_count()), intent(ctx.attribute_count());
    for (auto g : set_bits(c.extent)) extent.set(obj_map[g]);
    for (auto m : set_bits(c.intent)) intent.set(attr_map[m]);
    if (ctx.derive_objects(extent) != intent) return false;
    if (ctx.derive_attributes(intent) != extent) return false;
  }
  return true;
}

}  // namespace fcadi
