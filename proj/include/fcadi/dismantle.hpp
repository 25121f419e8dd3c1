#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fcadi/context.hpp"
#include "fcadi/lattice.hpp"

namespace fcadi {

/// Verdict for an interval [u,v]: quasi-dismantling means u is sup-prime in
/// the ideal of v and v is inf-prime in the filter of u; dismantling (strict)
/// additionally excludes u=⊥ and v=⊤. On failure `witness` carries a pair
/// violating one of the primality conditions.
struct DismantlingVerdict {
  Interval interval;
  bool quasi = false;
  bool strict = false;
  std::optional<std::pair<int, int>> witness;
};

DismantlingVerdict is_quasi_dismantling(const Lattice& lat, int u, int v);
bool is_dismantling(const Lattice& lat, int u, int v);

struct NotDismantlingError : std::runtime_error {
  NotDismantlingError(std::string msg, std::pair<int, int> w)
      : std::runtime_error(std::move(msg)), witness(w) {}
  std::pair<int, int> witness;
};

/// The S-removed context (G_S, M_S, I_S): only the objects, attributes and
/// incidences that belong to some concept outside S survive. Computed by both
/// the set-difference form and the union-over-survivors form, which must
/// agree (a std::logic_error if they ever do not).
struct SRemoved {
  FormalContext context;
  SubcontextSpec spec;      // in parent labels
  Bitset kept_objects;      // over parent object indices
  Bitset kept_attributes;   // over parent attribute indices
  std::vector<Bitset> kept_incidence;  // parent-indexed rows of I_S
};

SRemoved s_removed_context(const ConceptLattice& lat, const Bitset& concepts);

/// Label-pair form of a concept set; each pair must be a concept of the
/// context (InputError otherwise).
Bitset concept_set(const ConceptLattice& lat,
                   const std::vector<std::pair<std::vector<std::string>,
                                               std::vector<std::string>>>& pairs);

/// Remove the interval [u,v]; refused (NotDismantlingError with the witness)
/// unless it is quasi-dismantling. The result is the induced suborder on the
/// surviving concepts and is validated as a lattice; removing [⊥,⊤] yields
/// the empty lattice.
Sublattice remove_interval(const Lattice& lat, int u, int v);
Sublattice remove_interval(const ConceptLattice& lat, int u, int v);

struct ConceptLabels {
  std::vector<std::string> extent;
  std::vector<std::string> intent;
  friend bool operator==(const ConceptLabels&, const ConceptLabels&) = default;
};

/// Does 𝔅(K_S) equal 𝔅(K)∖S element-wise for the interval S=[u,v]?
/// `foreign` lists concepts of K_S that are not surviving concepts of K,
/// `missing` the converse. Removing every concept leaves the empty context,
/// whose lattice is read as empty, so the whole-lattice interval holds.
struct TheoremCheck {
  bool holds = false;
  std::vector<ConceptLabels> foreign;
  std::vector<ConceptLabels> missing;
};

TheoremCheck verify_main_theorem(const ConceptLattice& lat, int u, int v);
TheoremCheck verify_main_theorem(const ConceptLattice& lat, const Bitset& removed);

/// Evaluates both sides of the equivalence "S quasi-dismantling ⇔ the
/// removal of S is a faithful closed subcontext" independently and reports
/// their agreement. Faithful means no removed concept reappears among the
/// concepts of K_S; without that condition the equivalence fails for
/// intervals whose concepts contribute no incidence of their own (removing a
/// reducible top leaves K_S = K, a closed subcontext, while the interval is
/// not quasi-dismantling).
struct IffCheck {
  bool lattice_side = false;
  bool context_side = false;
  bool agree = false;
};

IffCheck verify_closed_subcontext_iff(const ConceptLattice& lat, int u, int v);

/// Singleton intervals: [c,c] is dismantling iff c is doubly irreducible;
/// quasi-dismantling iff doubly irreducible, or ⊤ and sup-irreducible, or
/// ⊥ and inf-irreducible, or ⊤=⊥.
struct SingletonVerdict {
  bool dismantling = false;
  bool quasi = false;
};

SingletonVerdict singleton_characterization(const Lattice& lat, int c);

/// Union removal over several intervals, each required to be
/// quasi-dismantling (InputError otherwise); the removed context is then a
/// closed subcontext.
bool multi_interval_closed_subcontext(const ConceptLattice& lat,
                                      const std::vector<Interval>& intervals);

enum class OrderPolicy { Lectic, Seeded };

struct RemovalStep {
  std::pair<std::string, std::string> generator;  // labels in that stage's standard context
  int lower = -1;                                 // original concept indices
  int upper = -1;
  std::vector<int> members;                       // original concept indices removed
};

/// Iterated removal of dismantling intervals down to the unique DI-core.
/// At every step the intervals of the current lattice are recomputed from its
/// standard context; the default order removes the generator pair that is
/// smallest in (object, attribute) label order, `Seeded` picks uniformly at
/// random. The resulting core is the same concept set for every order.
struct RemovalTrace {
  std::vector<RemovalStep> steps;
  std::vector<int> core;          // original concept indices, ascending
  Lattice core_order;
  FormalContext core_standard;    // standard context of the core
};

RemovalTrace di_core(const ConceptLattice& lat, OrderPolicy policy = OrderPolicy::Lectic,
                     std::uint64_t seed = 0);

/// Every sublattice reachable from `lat` by iteratively removing dismantling
/// intervals (the input itself included), as member bitsets. Exponential
/// search; refused above 12 elements.
std::set<Bitset> reachable_sublattices(const Lattice& lat);

/// One-context verification suite: the removed-set identity on random concept
/// sets, the removal theorem on every quasi-dismantling interval, the closed
/// subcontext equivalence on every interval, and the agreement of the
/// context-side primality tests with the lattice-side ones on every incidence.
struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

std::vector<CheckResult> verify_context(const FormalContext& ctx, std::uint64_t seed = 0);

}  // namespace fcadi
