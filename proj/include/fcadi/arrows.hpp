#pragma once

#include <map>
#include <string>
#include <vector>

#include "fcadi/context.hpp"
#include "fcadi/lattice.hpp"

namespace fcadi {

/* Arrow relations on the non-incident cells of a context:
 *
 *   g ↙ m  iff (g,m) ∉ I and every row strictly containing g' contains m,
 *   g ↗ m  iff (g,m) ∉ I and every column strictly containing m' contains g,
 *   g ⤢ m  iff both.
 *
 * Empty quantifier ranges make an arrow hold at any non-incident cell.
 * On the lattice side, g↙m ⇔ γg∧μm = (γg)⁎ ≠ γg and
 * g↗m ⇔ γg∨μm = (μm)⁎ ≠ μm.
 */
struct ArrowTable {
  std::vector<Bitset> up_rows;    // per object, over attributes
  std::vector<Bitset> down_rows;  // per object, over attributes
  std::vector<Bitset> up_cols;    // per attribute, over objects
  std::vector<Bitset> down_cols;  // per attribute, over objects

  bool up(std::size_t g, std::size_t m) const { return up_rows[g].test(m); }
  bool down(std::size_t g, std::size_t m) const { return down_rows[g].test(m); }
  bool both(std::size_t g, std::size_t m) const { return up(g, m) && down(g, m); }
};

ArrowTable arrow_table(const FormalContext& ctx);

/* Context-side primality tests for an interval [γg, μm] with (g,m) ∈ I.
 *
 * γg is sup-prime in the ideal of μm iff, in the attribute-clarified
 * subcontext K|_{m',M}, row g carries exactly one up-arrow and that cell is a
 * double arrow; μm is inf-prime in the filter of γg iff, in the
 * object-clarified K|_{G,g'}, column m carries exactly one down-arrow and
 * that cell is a double arrow. A full row (γg = ⊥, the least element of the
 * ideal) or a full column (μm = ⊤) is trivially prime. Both tests agree with
 * the lattice-side quantifier oracles on every incidence.
 */
bool sup_prime_context_side(const FormalContext& ctx, std::size_t g, std::size_t m);
bool inf_prime_context_side(const FormalContext& ctx, std::size_t g, std::size_t m);
bool sup_prime_context_side(const FormalContext& ctx, const std::string& g, const std::string& m);
bool inf_prime_context_side(const FormalContext& ctx, const std::string& g, const std::string& m);

/// Both primality conditions plus strictness (γg ≠ ⊥ and μm ≠ ⊤).
bool is_interval_dismantling_context_side(const FormalContext& ctx, std::size_t g, std::size_t m);
bool is_interval_dismantling_context_side(const FormalContext& ctx, const std::string& g,
                                          const std::string& m);

struct GeneratorPair {
  std::string object;
  std::string attribute;
  friend bool operator==(const GeneratorPair&, const GeneratorPair&) = default;
  friend auto operator<=>(const GeneratorPair&, const GeneratorPair&) = default;
};

/// All dismantling intervals of 𝔅(K), found without building the lattice.
/// The context is clarified and reduced first; each subcontext K|_{G,g'} and
/// K|_{m',M} is computed exactly once. Pairs are reported in reduced labels,
/// sorted by (object, attribute) label order; the maps translate back.
struct DismantlingIntervals {
  FormalContext reduced;
  std::map<std::string, std::string> object_merges;
  std::map<std::string, std::string> attribute_merges;
  std::vector<std::string> removed_objects;
  std::vector<std::string> removed_attributes;
  std::vector<GeneratorPair> pairs;
};

DismantlingIntervals compute_all_dismantling_intervals(const FormalContext& ctx);

/// Intervals of the generator pairs as concepts of 𝔅(reduced), deduplicated
/// by (lower, upper) concept pair and sorted.
std::vector<Interval> materialize_intervals(const DismantlingIntervals& found,
                                            const ConceptLattice& reduced_lattice);

/// Dismantling intervals of an abstract lattice, computed on its standard
/// context and mapped back through the canonical isomorphism.
std::vector<Interval> dismantling_intervals_of_lattice(const Lattice& lat);

}  // namespace fcadi
