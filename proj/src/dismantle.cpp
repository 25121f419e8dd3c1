#include "fcadi/dismantle.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "fcadi/arrows.hpp"

namespace fcadi {

DismantlingVerdict is_quasi_dismantling(const Lattice& lat, int u, int v) {
  if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= lat.size() ||
      static_cast<std::size_t>(v) >= lat.size()) {
    throw InputError("interval endpoint out of range");
  }
  if (!lat.leq(u, v)) throw InputError("not an interval: lower bound is not below upper bound");
  DismantlingVerdict ver;
  ver.interval = Interval{u, v};
  auto w = lat.sup_prime_violation(u, lat.ideal_set(v));
  if (!w) w = lat.inf_prime_violation(v, lat.filter_set(u));
  ver.quasi = !w.has_value();
  ver.witness = w;
  ver.strict = ver.quasi && u != lat.bottom && v != lat.top;
  return ver;
}

bool is_dismantling(const Lattice& lat, int u, int v) {
  return is_quasi_dismantling(lat, u, v).strict;
}

SRemoved s_removed_context(const ConceptLattice& lat, const Bitset& concepts) {
  if (concepts.size() != lat.concepts.size()) {
    throw InputError("concept set does not match the lattice");
  }
  const FormalContext& ctx = lat.context;
  const std::size_t ng = ctx.object_count();
  const std::size_t nm = ctx.attribute_count();

  std::vector<Bitset> kept_rows(ng, Bitset(nm));
  std::vector<Bitset> removed_rows(ng, Bitset(nm));
  Bitset kept_g(ng), kept_m(nm), removed_g(ng), removed_m(nm);
  for (std::size_t i = 0; i < lat.concepts.size(); ++i) {
    const FormalConcept& c = lat.concepts[i];
    bool in_s = concepts.test(i);
    (in_s ? removed_g : kept_g) |= c.extent;
    (in_s ? removed_m : kept_m) |= c.intent;
    auto& rows = in_s ? removed_rows : kept_rows;
    for (auto g : set_bits(c.extent)) rows[g] |= c.intent;
  }

  // The set-difference form must coincide with the union over survivors.
  Bitset g_diff = full_set(ng) & ~(removed_g & ~kept_g);
  Bitset m_diff = full_set(nm) & ~(removed_m & ~kept_m);
  if (g_diff != kept_g || m_diff != kept_m) {
    throw std::logic_error("removed-set identity violated for objects or attributes");
  }
  for (std::size_t g = 0; g < ng; ++g) {
    Bitset row_diff = ctx.rows[g] & ~(removed_rows[g] & ~kept_rows[g]);
    if (row_diff != kept_rows[g]) {
      throw std::logic_error("removed-set identity violated for incidences");
    }
  }

  SRemoved out;
  out.kept_objects = kept_g;
  out.kept_attributes = kept_m;
  out.kept_incidence = kept_rows;

  std::vector<std::size_t> omap = set_bits(kept_g);
  std::vector<std::size_t> amap = set_bits(kept_m);
  std::vector<std::string> olabels, alabels;
  for (auto g : omap) olabels.push_back(ctx.objects[g]);
  for (auto m : amap) alabels.push_back(ctx.attributes[m]);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t gi = 0; gi < omap.size(); ++gi) {
    for (std::size_t mi = 0; mi < amap.size(); ++mi) {
      if (kept_rows[omap[gi]].test(amap[mi])) pairs.emplace_back(gi, mi);
    }
  }
  out.context = FormalContext(olabels, alabels, pairs);
  out.spec.objects = std::move(olabels);
  out.spec.attributes = std::move(alabels);
  for (std::size_t g = 0; g < ng; ++g) {
    for (auto m : set_bits(kept_rows[g])) {
      out.spec.relation.emplace_back(ctx.objects[g], ctx.attributes[m]);
    }
  }
  return out;
}

Bitset concept_set(const ConceptLattice& lat,
                   const std::vector<std::pair<std::vector<std::string>,
                                               std::vector<std::string>>>& pairs) {
  Bitset out(lat.concepts.size());
  for (const auto& [extent, intent] : pairs) {
    Bitset e = lat.context.object_set(extent);
    int idx = lat.index_of_extent(e);
    if (idx < 0 || lat.concepts[idx].intent != lat.context.attribute_set(intent)) {
      throw InputError("not a concept of the context");
    }
    out.set(idx);
  }
  return out;
}

Sublattice remove_interval(const Lattice& lat, int u, int v) {
  DismantlingVerdict ver = is_quasi_dismantling(lat, u, v);
  if (!ver.quasi) {
    std::ostringstream msg;
    msg << "interval is not quasi-dismantling: elements " << ver.witness->first << " and "
        << ver.witness->second << " violate a primality condition";
    throw NotDismantlingError(msg.str(), *ver.witness);
  }
  Bitset keep = full_set(lat.size()) & ~lat.interval_set(u, v);
  return induced_sublattice(lat, keep, true);
}

Sublattice remove_interval(const ConceptLattice& lat, int u, int v) {
  return remove_interval(lat.order, u, v);
}

namespace {

ConceptLabels to_labels(const FormalContext& ctx, const Bitset& extent, const Bitset& intent) {
  return ConceptLabels{ctx.object_labels(extent), ctx.attribute_labels(intent)};
}

}  // namespace

TheoremCheck verify_main_theorem(const ConceptLattice& lat, int u, int v) {
  return verify_main_theorem(lat, lat.order.interval_set(u, v));
}

TheoremCheck verify_main_theorem(const ConceptLattice& lat, const Bitset& removed) {
  TheoremCheck out;
  if (removed.count() == lat.concepts.size()) {
    // Removing every concept leaves (∅,∅,∅); its lattice is read as empty.
    out.holds = true;
    return out;
  }
  SRemoved sr = s_removed_context(lat, removed);
  ConceptLattice sub = enumerate_concepts(sr.context);

  std::vector<std::size_t> omap = set_bits(sr.kept_objects);
  std::vector<std::size_t> amap = set_bits(sr.kept_attributes);
  std::set<std::pair<Bitset, Bitset>> got;
  for (const FormalConcept& c : sub.concepts) {
    Bitset e(lat.context.object_count());
    Bitset i(lat.context.attribute_count());
    for (auto g : set_bits(c.extent)) e.set(omap[g]);
    for (auto m : set_bits(c.intent)) i.set(amap[m]);
    got.emplace(std::move(e), std::move(i));
  }
  std::set<std::pair<Bitset, Bitset>> want;
  for (std::size_t i = 0; i < lat.concepts.size(); ++i) {
    if (!removed.test(i)) want.emplace(lat.concepts[i].extent, lat.concepts[i].intent);
  }
  for (const auto& c : got) {
    if (!want.count(c)) out.foreign.push_back(to_labels(lat.context, c.first, c.second));
  }
  for (const auto& c : want) {
    if (!got.count(c)) out.missing.push_back(to_labels(lat.context, c.first, c.second));
  }
  out.holds = out.foreign.empty() && out.missing.empty();
  return out;
}

IffCheck verify_closed_subcontext_iff(const ConceptLattice& lat, int u, int v) {
  IffCheck out;
  out.lattice_side = is_quasi_dismantling(lat.order, u, v).quasi;
  Bitset removed = lat.order.interval_set(u, v);
  if (removed.count() == lat.concepts.size()) {
    out.context_side = true;  // whole-lattice removal: the empty lattice is vacuously closed
  } else {
    SRemoved sr = s_removed_context(lat, removed);
    bool closed = is_closed_subcontext(lat.context, sr.spec);
    bool faithful = true;
    if (closed) {
      std::vector<std::size_t> omap = set_bits(sr.kept_objects);
      std::vector<std::size_t> amap = set_bits(sr.kept_attributes);
      ConceptLattice sub = enumerate_concepts(sr.context);
      for (const FormalConcept& c : sub.concepts) {
        Bitset extent(lat.context.object_count());
        Bitset intent(lat.context.attribute_count());
        for (auto g : set_bits(c.extent)) extent.set(omap[g]);
        for (auto m : set_bits(c.intent)) intent.set(amap[m]);
        int idx = lat.index_of_extent(extent);
        if (idx >= 0 && removed.test(idx) && lat.concepts[idx].intent == intent) {
          faithful = false;  // a removed concept survived the removal
          break;
        }
      }
    }
    out.context_side = closed && faithful;
  }
  out.agree = (out.lattice_side == out.context_side);
  return out;
}

SingletonVerdict singleton_characterization(const Lattice& lat, int c) {
  SingletonVerdict out;
  bool doubly = lat.doubly_irreducible(c);
  out.dismantling = doubly;
  out.quasi = doubly || (c == lat.top && lat.sup_irreducible(c)) ||
              (c == lat.bottom && lat.inf_irreducible(c)) || lat.top == lat.bottom;
  return out;
}

bool multi_interval_closed_subcontext(const ConceptLattice& lat,
                                      const std::vector<Interval>& intervals) {
  Bitset removed(lat.concepts.size());
  for (const Interval& iv : intervals) {
    DismantlingVerdict ver = is_quasi_dismantling(lat.order, iv.lower, iv.upper);
    if (!ver.quasi) {
      throw InputError("an interval in the list is not quasi-dismantling");
    }
    removed |= lat.order.interval_set(iv.lower, iv.upper);
  }
  if (removed.count() == lat.concepts.size()) return true;
  SRemoved sr = s_removed_context(lat, removed);
  return is_closed_subcontext(lat.context, sr.spec);
}

RemovalTrace di_core(const ConceptLattice& lat, OrderPolicy policy, std::uint64_t seed) {
  RemovalTrace trace;
  std::mt19937_64 rng(seed);

  Sublattice cur;
  cur.order = lat.order;
  cur.members.resize(lat.concepts.size());
  std::iota(cur.members.begin(), cur.members.end(), 0);

  while (cur.order.size() > 0) {
    StandardContext sc = standard_context(cur.order);
    DismantlingIntervals found = compute_all_dismantling_intervals(sc.context);
    if (found.pairs.empty()) break;
    std::size_t pick = 0;  // pairs are sorted by label, so 0 is the lectic choice
    if (policy == OrderPolicy::Seeded) {
      pick = static_cast<std::size_t>(rng() % found.pairs.size());
    }
    const GeneratorPair& p = found.pairs[pick];
    int u = sc.object_elements[sc.context.object_index(p.object)];
    int v = sc.attribute_elements[sc.context.attribute_index(p.attribute)];

    RemovalStep step;
    step.generator = {p.object, p.attribute};
    step.lower = cur.members[u];
    step.upper = cur.members[v];
    for (auto i : set_bits(cur.order.interval_set(u, v))) {
      step.members.push_back(cur.members[i]);
    }
    trace.steps.push_back(std::move(step));

    Sublattice next = remove_interval(cur.order, u, v);
    std::vector<int> members;
    members.reserve(next.members.size());
    for (int i : next.members) members.push_back(cur.members[i]);
    cur.order = std::move(next.order);
    cur.members = std::move(members);
  }

  trace.core = cur.members;
  trace.core_order = cur.order;
  if (cur.order.size() > 0) {
    trace.core_standard = standard_context(cur.order).context;
  }
  return trace;
}

std::set<Bitset> reachable_sublattices(const Lattice& lat) {
  if (lat.size() > 12) {
    throw InputError("reachable-sublattice search is exponential and limited to 12 elements");
  }
  std::set<Bitset> seen;
  std::vector<Bitset> work;
  Bitset all = full_set(lat.size());
  seen.insert(all);
  work.push_back(all);
  while (!work.empty()) {
    Bitset state = work.back();
    work.pop_back();
    Sublattice sub = induced_sublattice(lat, state, false);
    const std::size_t k = sub.order.size();
    for (std::size_t u = 0; u < k; ++u) {
      for (std::size_t v = 0; v < k; ++v) {
        if (!sub.order.leq(static_cast<int>(u), static_cast<int>(v))) continue;
        if (!is_quasi_dismantling(sub.order, static_cast<int>(u), static_cast<int>(v)).strict) {
          continue;
        }
        Bitset next = state;
        for (auto i : set_bits(sub.order.interval_set(static_cast<int>(u), static_cast<int>(v)))) {
          next.reset(sub.members[i]);
        }
        if (seen.insert(next).second) work.push_back(next);
      }
    }
  }
  return seen;
}

std::vector<CheckResult> verify_context(const FormalContext& ctx, std::uint64_t seed) {
  std::vector<CheckResult> out;
  ConceptLattice lat = enumerate_concepts(ctx);
  const std::size_t n = lat.concepts.size();

  {
    CheckResult r{"lemma-identity", true, ""};
    std::mt19937_64 rng(seed);
    try {
      for (int t = 0; t < 10; ++t) {
        Bitset s(n);
        for (std::size_t i = 0; i < n; ++i) {
          if (rng() & 1) s.set(i);
        }
        s_removed_context(lat, s);
      }
    } catch (const std::logic_error& e) {
      r.pass = false;
      r.detail = e.what();
    }
    out.push_back(std::move(r));
  }
  {
    CheckResult r{"theorem-main", true, ""};
    for (std::size_t u = 0; u < n && r.pass; ++u) {
      for (std::size_t v = 0; v < n && r.pass; ++v) {
        if (!lat.order.leq(static_cast<int>(u), static_cast<int>(v))) continue;
        if (!is_quasi_dismantling(lat.order, static_cast<int>(u), static_cast<int>(v)).quasi) {
          continue;
        }
        TheoremCheck th = verify_main_theorem(lat, static_cast<int>(u), static_cast<int>(v));
        if (!th.holds) {
          r.pass = false;
          r.detail = "interval (" + std::to_string(u) + ", " + std::to_string(v) + ")";
        }
      }
    }
    out.push_back(std::move(r));
  }
  {
    CheckResult r{"closed-subcontext-iff", true, ""};
    for (std::size_t u = 0; u < n && r.pass; ++u) {
      for (std::size_t v = 0; v < n && r.pass; ++v) {
        if (!lat.order.leq(static_cast<int>(u), static_cast<int>(v))) continue;
        IffCheck iff = verify_closed_subcontext_iff(lat, static_cast<int>(u), static_cast<int>(v));
        if (!iff.agree) {
          r.pass = false;
          r.detail = "interval (" + std::to_string(u) + ", " + std::to_string(v) + ")";
        }
      }
    }
    out.push_back(std::move(r));
  }
  {
    CheckResult r{"prime-conjunct-agreement", true, ""};
    for (std::size_t g = 0; g < ctx.object_count() && r.pass; ++g) {
      for (std::size_t m = 0; m < ctx.attribute_count() && r.pass; ++m) {
        if (!ctx.incident(g, m)) continue;
        int gg = lat.object_concept[g];
        int mm = lat.attribute_concept[m];
        bool sup_ctx = sup_prime_context_side(ctx, g, m);
        bool inf_ctx = inf_prime_context_side(ctx, g, m);
        bool sup_lat = !lat.order.sup_prime_violation(gg, lat.order.ideal_set(mm)).has_value();
        bool inf_lat = !lat.order.inf_prime_violation(mm, lat.order.filter_set(gg)).has_value();
        bool whole_ctx = is_interval_dismantling_context_side(ctx, g, m);
        bool whole_lat = is_dismantling(lat.order, gg, mm);
        if (sup_ctx != sup_lat || inf_ctx != inf_lat || whole_ctx != whole_lat) {
          r.pass = false;
          r.detail = "cell (" + ctx.objects[g] + ", " + ctx.attributes[m] + ")";
        }
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace fcadi
