#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fcadi/bitset.hpp"
#include "fcadi/context.hpp"
#include "fcadi/errors.hpp"

namespace fcadi {

/// A finite lattice given by its order relation. `up[i]` is the reflexive
/// up-set of element i as a bitset, `down[i]` the dual; covers are the
/// transitive reduction. The empty lattice (zero elements) is allowed — it
/// occurs as the result of removing a whole-lattice interval.
struct Lattice {
  std::vector<Bitset> up;
  std::vector<Bitset> down;
  std::vector<std::vector<int>> upper_covers;
  std::vector<std::vector<int>> lower_covers;
  int top = -1;
  int bottom = -1;

  std::size_t size() const { return up.size(); }
  bool leq(int a, int b) const { return up[a].test(b); }

  int join(int a, int b) const;
  int meet(int a, int b) const;
  int join_set(const Bitset& xs) const;  // empty set joins to bottom
  int meet_set(const Bitset& xs) const;  // empty set meets to top

  const Bitset& filter_set(int c) const { return up[c]; }
  const Bitset& ideal_set(int c) const { return down[c]; }
  Bitset interval_set(int u, int v) const;  // InputError unless u ≤ v

  int lower_star(int c) const;  // join of the strict down-set
  int upper_star(int c) const;  // meet of the strict up-set
  bool sup_irreducible(int c) const { return lower_covers[c].size() == 1; }
  bool inf_irreducible(int c) const { return upper_covers[c].size() == 1; }
  bool doubly_irreducible(int c) const { return sup_irreducible(c) && inf_irreducible(c); }

  /// c is supremum-prime in the carrier when c ≤ x∨y forces c ≤ x or c ≤ y
  /// for all x, y in the carrier. The carrier must contain c and be closed
  /// under binary joins (ideals and filters are); anything else is refused.
  bool sup_prime_in(int c, const Bitset& carrier) const;
  bool inf_prime_in(int c, const Bitset& carrier) const;

  // First violating pair, if any; no carrier validation.
  std::optional<std::pair<int, int>> sup_prime_violation(int c, const Bitset& carrier) const;
  std::optional<std::pair<int, int>> inf_prime_violation(int c, const Bitset& carrier) const;

  /// Build from reflexive up-sets; checks order axioms and that every pair
  /// has a join and a meet (StructureError otherwise).
  static Lattice from_order(std::vector<Bitset> up_sets);
  /// Build from Hasse edges (lower, upper); the transitive closure is taken.
  static Lattice from_covers(std::size_t n, const std::vector<std::pair<int, int>>& edges);

  // Fills down/covers/top/bottom (and join/meet tables for small sizes).
  void finish(bool validate);

 private:
  std::vector<int> join_table_;
  std::vector<int> meet_table_;
  int scan_join(int a, int b) const;
  int scan_meet(int a, int b) const;
};

struct Interval {
  int lower = -1;
  int upper = -1;
  friend bool operator==(const Interval&, const Interval&) = default;
  friend auto operator<=>(const Interval&, const Interval&) = default;
};

Interval make_interval(const Lattice& lat, int u, int v);  // InputError unless u ≤ v

/// An induced sublattice: the suborder on `members` (indices into the parent).
struct Sublattice {
  Lattice order;
  std::vector<int> members;
};

Sublattice induced_sublattice(const Lattice& lat, const Bitset& members, bool validate);

struct FormalConcept {
  Bitset extent;
  Bitset intent;
  friend bool operator==(const FormalConcept&, const FormalConcept&) = default;
};

/// All concepts of a context in lectic order of their intents, together with
/// the order structure and the object/attribute concept maps. Immutable after
/// enumeration.
struct ConceptLattice {
  FormalContext context;
  std::vector<FormalConcept> concepts;
  Lattice order;
  std::vector<int> object_concept;     // γg per object
  std::vector<int> attribute_concept;  // μm per attribute

  int index_of_extent(const Bitset& extent) const;  // -1 when not a concept
  int gamma(const std::string& object_label) const;
  int mu(const std::string& attribute_label) const;

  std::map<Bitset, int> extent_index;
};

/// Lectic (NextClosure) enumeration over intents; deterministic for a given
/// attribute order. The first concept is the top, the last the bottom.
ConceptLattice enumerate_concepts(const FormalContext& ctx);

/// The standard context (sup-irreducibles, inf-irreducibles, ≤) of a lattice.
/// Its concept lattice is isomorphic to the input. Refused for the empty
/// lattice. Labels default to the decimal element index.
struct StandardContext {
  FormalContext context;
  std::vector<int> object_elements;     // lattice element per context object
  std::vector<int> attribute_elements;  // lattice element per context attribute
};

StandardContext standard_context(const Lattice& lat,
                                 const std::vector<std::string>& element_labels = {});

/// Map a concept of the standard context back to the lattice element it
/// represents (the join of its extent's irreducibles).
int standard_concept_element(const Lattice& lat, const StandardContext& sc,
                             const FormalConcept& c);

/// Hasse diagram as DOT. Nodes carry the reduced labeling (attributes at
/// their attribute concept, objects at their object concept); `highlight`
/// selects concepts drawn filled.
std::string to_dot(const ConceptLattice& lat, const Bitset* highlight = nullptr);

}  // namespace fcadi
