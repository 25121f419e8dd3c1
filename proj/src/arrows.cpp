#include "fcadi/arrows.hpp"

#include <algorithm>
#include <set>

namespace fcadi {

ArrowTable arrow_table(const FormalContext& ctx) {
  const std::size_t n = ctx.object_count();
  const std::size_t m = ctx.attribute_count();

  // inter_row[g] = ∩{h' : g' ⊊ h'} (M when no row is strictly larger), so
  // g↙m ⇔ (g,m)∉I and m ∈ inter_row[g]; columns dually.
  std::vector<Bitset> inter_row(n), inter_col(m);
  for (std::size_t g = 0; g < n; ++g) {
    Bitset inter = full_set(m);
    for (std::size_t h = 0; h < n; ++h) {
      if (h != g && ctx.rows[g].is_proper_subset_of(ctx.rows[h])) inter &= ctx.rows[h];
    }
    inter_row[g] = std::move(inter);
  }
  for (std::size_t a = 0; a < m; ++a) {
    Bitset inter = full_set(n);
    for (std::size_t b = 0; b < m; ++b) {
      if (b != a && ctx.cols[a].is_proper_subset_of(ctx.cols[b])) inter &= ctx.cols[b];
    }
    inter_col[a] = std::move(inter);
  }

  ArrowTable t;
  t.down_rows.resize(n);
  t.up_rows.assign(n, Bitset(m));
  t.up_cols.resize(m);
  t.down_cols.assign(m, Bitset(n));
  for (std::size_t g = 0; g < n; ++g) {
    t.down_rows[g] = inter_row[g] & ~ctx.rows[g];
  }
  for (std::size_t a = 0; a < m; ++a) {
    t.up_cols[a] = inter_col[a] & ~ctx.cols[a];
    for (auto g = t.up_cols[a].find_first(); g != Bitset::npos; g = t.up_cols[a].find_next(g)) {
      t.up_rows[g].set(a);
    }
  }
  for (std::size_t g = 0; g < n; ++g) {
    for (auto a = t.down_rows[g].find_first(); a != Bitset::npos; a = t.down_rows[g].find_next(a)) {
      t.down_cols[a].set(g);
    }
  }
  return t;
}

namespace {

void require_incident(const FormalContext& ctx, std::size_t g, std::size_t m) {
  if (g >= ctx.object_count() || m >= ctx.attribute_count() || !ctx.incident(g, m)) {
    throw InputError("(object, attribute) must be incident: the interval [γg, μm] needs γg ≤ μm");
  }
}

}  // namespace

bool sup_prime_context_side(const FormalContext& ctx, std::size_t g, std::size_t m) {
  require_incident(ctx, g, m);
  if (ctx.rows[g].all()) return true;  // γg is the least element of the ideal
  FormalContext sub = subcontext(ctx, ctx.cols[m], full_set(ctx.attribute_count()));
  ClarifyResult cl = clarify(sub, ClarifySide::Attributes);
  std::size_t gi = cl.context.object_index(ctx.objects[g]);
  ArrowTable t = arrow_table(cl.context);
  const Bitset& ups = t.up_rows[gi];
  return ups.count() == 1 && t.down_rows[gi].test(ups.find_first());
}

bool inf_prime_context_side(const FormalContext& ctx, std::size_t g, std::size_t m) {
  require_incident(ctx, g, m);
  if (ctx.cols[m].all()) return true;  // μm is the greatest element of the filter
  FormalContext sub = subcontext(ctx, full_set(ctx.object_count()), ctx.rows[g]);
  ClarifyResult cl = clarify(sub, ClarifySide::Objects);
  std::size_t mi = cl.context.attribute_index(ctx.attributes[m]);
  ArrowTable t = arrow_table(cl.context);
  const Bitset& downs = t.down_cols[mi];
  return downs.count() == 1 && t.up_cols[mi].test(downs.find_first());
}

bool sup_prime_context_side(const FormalContext& ctx, const std::string& g, const std::string& m) {
  return sup_prime_context_side(ctx, ctx.object_index(g), ctx.attribute_index(m));
}

bool inf_prime_context_side(const FormalContext& ctx, const std::string& g, const std::string& m) {
  return inf_prime_context_side(ctx, ctx.object_index(g), ctx.attribute_index(m));
}

bool is_interval_dismantling_context_side(const FormalContext& ctx, std::size_t g, std::size_t m) {
  require_incident(ctx, g, m);
  if (ctx.rows[g].all()) return false;  // γg = ⊥
  if (ctx.cols[m].all()) return false;  // μm = ⊤
  return sup_prime_context_side(ctx, g, m) && inf_prime_context_side(ctx, g, m);
}

bool is_interval_dismantling_context_side(const FormalContext& ctx, const std::string& g,
                                          const std::string& m) {
  return is_interval_dismantling_context_side(ctx, ctx.object_index(g), ctx.attribute_index(m));
}

DismantlingIntervals compute_all_dismantling_intervals(const FormalContext& ctx) {
  DismantlingIntervals out;
  ClarifyResult cl = clarify(ctx, ClarifySide::Both);
  out.object_merges = std::move(cl.object_merges);
  out.attribute_merges = std::move(cl.attribute_merges);
  ReduceResult red = reduce(cl.context);
  out.removed_objects = std::move(red.removed_objects);
  out.removed_attributes = std::move(red.removed_attributes);
  out.reduced = std::move(red.context);
  const FormalContext& k = out.reduced;

  // A reduced context has no full rows or columns, so every candidate pair
  // already satisfies γg ≠ ⊥ and μm ≠ ⊤.
  std::set<std::pair<std::size_t, std::size_t>> inf_ok, sup_ok;

  for (std::size_t g = 0; g < k.object_count(); ++g) {
    if (k.rows[g].all()) continue;
    FormalContext sub = subcontext(k, full_set(k.object_count()), k.rows[g]);
    ClarifyResult c2 = clarify(sub, ClarifySide::Objects);
    ArrowTable t = arrow_table(c2.context);
    for (std::size_t mi = 0; mi < c2.context.attribute_count(); ++mi) {
      const Bitset& downs = t.down_cols[mi];
      if (downs.count() == 1 && t.up_cols[mi].test(downs.find_first())) {
        inf_ok.emplace(g, k.attribute_index(c2.context.attributes[mi]));
      }
    }
  }

  for (std::size_t m = 0; m < k.attribute_count(); ++m) {
    if (k.cols[m].all()) continue;
    FormalContext sub = subcontext(k, k.cols[m], full_set(k.attribute_count()));
    ClarifyResult c2 = clarify(sub, ClarifySide::Attributes);
    ArrowTable t = arrow_table(c2.context);
    for (std::size_t gi = 0; gi < c2.context.object_count(); ++gi) {
      const Bitset& ups = t.up_rows[gi];
      if (ups.count() == 1 && t.down_rows[gi].test(ups.find_first())) {
        sup_ok.emplace(k.object_index(c2.context.objects[gi]), m);
      }
    }
  }

  for (const auto& p : inf_ok) {
    if (sup_ok.count(p)) {
      out.pairs.push_back({k.objects[p.first], k.attributes[p.second]});
    }
  }
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

std::vector<Interval> materialize_intervals(const DismantlingIntervals& found,
                                            const ConceptLattice& reduced_lattice) {
  std::set<Interval> dedup;
  for (const auto& p : found.pairs) {
    dedup.insert(Interval{reduced_lattice.gamma(p.object), reduced_lattice.mu(p.attribute)});
  }
  return {dedup.begin(), dedup.end()};
}

std::vector<Interval> dismantling_intervals_of_lattice(const Lattice& lat) {
  if (lat.size() == 0) return {};
  StandardContext sc = standard_context(lat);
  DismantlingIntervals found = compute_all_dismantling_intervals(sc.context);
  // Standard contexts are already reduced, so the labels pass through.
  std::set<Interval> dedup;
  for (const auto& p : found.pairs) {
    int u = sc.object_elements[sc.context.object_index(p.object)];
    int v = sc.attribute_elements[sc.context.attribute_index(p.attribute)];
    dedup.insert(Interval{u, v});
  }
  return {dedup.begin(), dedup.end()};
}

}  // namespace fcadi
