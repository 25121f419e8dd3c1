#include "fcadi/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace fcadi {

namespace {
constexpr std::size_t kTableLimit = 512;  // join/meet tables beyond this would dominate memory
}

int Lattice::scan_join(int a, int b) const {
  Bitset ub = up[a] & up[b];
  for (auto k = ub.find_first(); k != Bitset::npos; k = ub.find_next(k)) {
    if ((ub & ~up[k]).none()) return static_cast<int>(k);
  }
  return -1;
}

int Lattice::scan_meet(int a, int b) const {
  Bitset lb = down[a] & down[b];
  for (auto k = lb.find_first(); k != Bitset::npos; k = lb.find_next(k)) {
    if ((lb & ~down[k]).none()) return static_cast<int>(k);
  }
  return -1;
}

int Lattice::join(int a, int b) const {
  int j = join_table_.empty() ? scan_join(a, b) : join_table_[a * size() + b];
  if (j < 0) throw StructureError("pair has no supremum");
  return j;
}

int Lattice::meet(int a, int b) const {
  int m = meet_table_.empty() ? scan_meet(a, b) : meet_table_[a * size() + b];
  if (m < 0) throw StructureError("pair has no infimum");
  return m;
}

int Lattice::join_set(const Bitset& xs) const {
  int acc = bottom;
  for (auto i = xs.find_first(); i != Bitset::npos; i = xs.find_next(i)) {
    acc = (acc < 0) ? static_cast<int>(i) : join(acc, static_cast<int>(i));
  }
  return acc;
}

int Lattice::meet_set(const Bitset& xs) const {
  int acc = top;
  for (auto i = xs.find_first(); i != Bitset::npos; i = xs.find_next(i)) {
    acc = (acc < 0) ? static_cast<int>(i) : meet(acc, static_cast<int>(i));
  }
  return acc;
}

Bitset Lattice::interval_set(int u, int v) const {
  if (!leq(u, v)) throw InputError("not an interval: lower bound is not below upper bound");
  return up[u] & down[v];
}

int Lattice::lower_star(int c) const {
  Bitset strict = down[c];
  strict.reset(c);
  return join_set(strict);
}

int Lattice::upper_star(int c) const {
  Bitset strict = up[c];
  strict.reset(c);
  return meet_set(strict);
}

std::optional<std::pair<int, int>> Lattice::sup_prime_violation(int c, const Bitset& carrier) const {
  for (auto x = carrier.find_first(); x != Bitset::npos; x = carrier.find_next(x)) {
    if (leq(c, static_cast<int>(x))) continue;
    for (auto y = carrier.find_next(x); y != Bitset::npos; y = carrier.find_next(y)) {
      if (leq(c, static_cast<int>(y))) continue;
      if (leq(c, join(static_cast<int>(x), static_cast<int>(y)))) {
        return std::make_pair(static_cast<int>(x), static_cast<int>(y));
      }
    }
  }
  return std::nullopt;
}

std::optional<std::pair<int, int>> Lattice::inf_prime_violation(int c, const Bitset& carrier) const {
  for (auto x = carrier.find_first(); x != Bitset::npos; x = carrier.find_next(x)) {
    if (leq(static_cast<int>(x), c)) continue;
    for (auto y = carrier.find_next(x); y != Bitset::npos; y = carrier.find_next(y)) {
      if (leq(static_cast<int>(y), c)) continue;
      if (leq(meet(static_cast<int>(x), static_cast<int>(y)), c)) {
        return std::make_pair(static_cast<int>(x), static_cast<int>(y));
      }
    }
  }
  return std::nullopt;
}

bool Lattice::sup_prime_in(int c, const Bitset& carrier) const {
  if (!carrier.test(c)) throw InputError("element is not in the carrier");
  for (auto x = carrier.find_first(); x != Bitset::npos; x = carrier.find_next(x)) {
    for (auto y = carrier.find_next(x); y != Bitset::npos; y = carrier.find_next(y)) {
      if (!carrier.test(join(static_cast<int>(x), static_cast<int>(y)))) {
        throw InputError("carrier is not closed under joins");
      }
    }
  }
  return !sup_prime_violation(c, carrier).has_value();
}

bool Lattice::inf_prime_in(int c, const Bitset& carrier) const {
  if (!carrier.test(c)) throw InputError("element is not in the carrier");
  for (auto x = carrier.find_first(); x != Bitset::npos; x = carrier.find_next(x)) {
    for (auto y = carrier.find_next(x); y != Bitset::npos; y = carrier.find_next(y)) {
      if (!carrier.test(meet(static_cast<int>(x), static_cast<int>(y)))) {
        throw InputError("carrier is not closed under meets");
      }
    }
  }
  return !inf_prime_violation(c, carrier).has_value();
}

void Lattice::finish(bool validate) {
  const std::size_t n = up.size();
  down.assign(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (auto j = up[i].find_first(); j != Bitset::npos; j = up[i].find_next(j)) {
      down[j].set(i);
    }
  }

  if (validate) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!up[i].test(i)) throw StructureError("order is not reflexive");
      for (auto j = up[i].find_first(); j != Bitset::npos; j = up[i].find_next(j)) {
        if (j != i && up[j].test(i)) throw StructureError("order is not antisymmetric");
        if ((up[j] & ~up[i]).any()) throw StructureError("order is not transitive");
      }
    }
  }

  upper_covers.assign(n, {});
  lower_covers.assign(n, {});
  for (std::size_t i = 0; i < n; ++i) {
    for (auto j = up[i].find_first(); j != Bitset::npos; j = up[i].find_next(j)) {
      if (j == i) continue;
      if ((up[i] & down[j]).count() == 2) {
        upper_covers[i].push_back(static_cast<int>(j));
        lower_covers[j].push_back(static_cast<int>(i));
      }
    }
  }

  top = bottom = -1;
  for (std::size_t i = 0; i < n; ++i) {
    if (up[i].count() == 1) {
      if (validate && top >= 0) throw StructureError("order has more than one maximal element");
      top = static_cast<int>(i);
    }
    if (down[i].count() == 1) {
      if (validate && bottom >= 0) throw StructureError("order has more than one minimal element");
      bottom = static_cast<int>(i);
    }
  }

  join_table_.clear();
  meet_table_.clear();
  if (n > 0 && n <= kTableLimit) {
    join_table_.assign(n * n, -1);
    meet_table_.assign(n * n, -1);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a; b < n; ++b) {
        int j = scan_join(static_cast<int>(a), static_cast<int>(b));
        int m = scan_meet(static_cast<int>(a), static_cast<int>(b));
        if (validate && (j < 0 || m < 0)) {
          throw StructureError("order is not a lattice: a pair lacks a supremum or infimum");
        }
        join_table_[a * n + b] = join_table_[b * n + a] = j;
        meet_table_[a * n + b] = meet_table_[b * n + a] = m;
      }
    }
  } else if (validate) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        if (scan_join(static_cast<int>(a), static_cast<int>(b)) < 0 ||
            scan_meet(static_cast<int>(a), static_cast<int>(b)) < 0) {
          throw StructureError("order is not a lattice: a pair lacks a supremum or infimum");
        }
      }
    }
  }
}

Lattice Lattice::from_order(std::vector<Bitset> up_sets) {
  Lattice lat;
  lat.up = std::move(up_sets);
  lat.finish(true);
  return lat;
}

Lattice Lattice::from_covers(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<Bitset> up_sets(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i) up_sets[i].set(i);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [lo, hi] : edges) {
      Bitset merged = up_sets[lo] | up_sets[hi];
      if (merged != up_sets[lo]) {
        up_sets[lo] = std::move(merged);
        changed = true;
      }
    }
  }
  return from_order(std::move(up_sets));
}

Interval make_interval(const Lattice& lat, int u, int v) {
  if (!lat.leq(u, v)) throw InputError("not an interval: lower bound is not below upper bound");
  return Interval{u, v};
}

Sublattice induced_sublattice(const Lattice& lat, const Bitset& members, bool validate) {
  Sublattice sub;
  for (auto i : set_bits(members)) sub.members.push_back(static_cast<int>(i));
  const std::size_t k = sub.members.size();
  sub.order.up.assign(k, Bitset(k));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      if (lat.leq(sub.members[a], sub.members[b])) sub.order.up[a].set(b);
    }
  }
  sub.order.finish(validate);
  return sub;
}

int ConceptLattice::index_of_extent(const Bitset& extent) const {
  auto it = extent_index.find(extent);
  return it == extent_index.end() ? -1 : it->second;
}

int ConceptLattice::gamma(const std::string& object_label) const {
  return object_concept[context.object_index(object_label)];
}

int ConceptLattice::mu(const std::string& attribute_label) const {
  return attribute_concept[context.attribute_index(attribute_label)];
}

ConceptLattice enumerate_concepts(const FormalContext& ctx) {
  ConceptLattice lat;
  lat.context = ctx;
  const std::size_t m = ctx.attribute_count();

  Bitset intent = ctx.intent_closure(Bitset(m));
  for (;;) {
    lat.concepts.push_back({ctx.derive_attributes(intent), intent});
    // NextClosure step: find the lectically next intent.
    bool advanced = false;
    Bitset a = intent;
    for (std::size_t ii = m; ii-- > 0;) {
      if (a.test(ii)) {
        a.reset(ii);
        continue;
      }
      Bitset cand = a;
      cand.set(ii);
      cand = ctx.intent_closure(cand);
      if ((cand & ~a).find_first() == ii) {
        intent = std::move(cand);
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }

  const std::size_t n = lat.concepts.size();
  lat.order.up.assign(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (lat.concepts[i].extent.is_subset_of(lat.concepts[j].extent)) lat.order.up[i].set(j);
    }
  }
  lat.order.finish(false);

  for (std::size_t i = 0; i < n; ++i) {
    lat.extent_index.emplace(lat.concepts[i].extent, static_cast<int>(i));
  }
  lat.object_concept.resize(ctx.object_count());
  for (std::size_t g = 0; g < ctx.object_count(); ++g) {
    Bitset single(ctx.object_count());
    single.set(g);
    lat.object_concept[g] = lat.index_of_extent(ctx.extent_closure(single));
  }
  lat.attribute_concept.resize(m);
  for (std::size_t a = 0; a < m; ++a) {
    lat.attribute_concept[a] = lat.index_of_extent(ctx.cols[a]);
  }
  return lat;
}

StandardContext standard_context(const Lattice& lat, const std::vector<std::string>& element_labels) {
  if (lat.size() == 0) throw StructureError("the empty lattice has no standard context");
  StandardContext sc;
  auto name = [&](int i) {
    return element_labels.empty() ? std::to_string(i) : element_labels[i];
  };
  for (std::size_t i = 0; i < lat.size(); ++i) {
    if (lat.sup_irreducible(static_cast<int>(i))) sc.object_elements.push_back(static_cast<int>(i));
    if (lat.inf_irreducible(static_cast<int>(i))) sc.attribute_elements.push_back(static_cast<int>(i));
  }
  std::vector<std::string> olabels, alabels;
  for (int j : sc.object_elements) olabels.push_back(name(j));
  for (int m : sc.attribute_elements) alabels.push_back(name(m));
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < sc.object_elements.size(); ++a) {
    for (std::size_t b = 0; b < sc.attribute_elements.size(); ++b) {
      if (lat.leq(sc.object_elements[a], sc.attribute_elements[b])) pairs.emplace_back(a, b);
    }
  }
  sc.context = FormalContext(std::move(olabels), std::move(alabels), pairs);
  return sc;
}

int standard_concept_element(const Lattice& lat, const StandardContext& sc,
                             const FormalConcept& c) {
  Bitset elems(lat.size());
  for (auto g : set_bits(c.extent)) elems.set(sc.object_elements[g]);
  return lat.join_set(elems);
}

std::string to_dot(const ConceptLattice& lat, const Bitset* highlight) {
  std::ostringstream os;
  os << "digraph concept_lattice {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=ellipse, fontsize=10];\n";
  os << "  edge [dir=none];\n";
  for (std::size_t i = 0; i < lat.concepts.size(); ++i) {
    std::string attrs, objs;
    for (std::size_t m = 0; m < lat.context.attribute_count(); ++m) {
      if (lat.attribute_concept[m] == static_cast<int>(i)) {
        if (!attrs.empty()) attrs += ", ";
        attrs += lat.context.attributes[m];
      }
    }
    for (std::size_t g = 0; g < lat.context.object_count(); ++g) {
      if (lat.object_concept[g] == static_cast<int>(i)) {
        if (!objs.empty()) objs += ", ";
        objs += lat.context.objects[g];
      }
    }
    os << "  n" << i << " [label=\"" << attrs << "\\n" << objs << "\"";
    if (highlight && highlight->test(i)) os << ", style=filled, fillcolor=gray";
    os << "];\n";
  }
  for (std::size_t i = 0; i < lat.concepts.size(); ++i) {
    for (int j : lat.order.upper_covers[static_cast<int>(i)]) {
      os << "  n" << i << " -> n" << j << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace fcadi
