#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fcadi/bitset.hpp"
#include "fcadi/errors.hpp"

namespace fcadi {

/// A finite formal context (G, M, I): an ordered list of object labels, an
/// ordered list of attribute labels and an incidence relation I ⊆ G×M.
///
/// The incidence is stored twice, as bit rows per object and bit columns per
/// attribute, so both derivation operators are word-parallel intersections.
/// Instances are immutable after construction; all operations below are pure.
struct FormalContext {
  std::vector<std::string> objects;     // stable insertion order
  std::vector<std::string> attributes;  // stable insertion order
  std::vector<Bitset> rows;             // rows[g] over attribute indices
  std::vector<Bitset> cols;             // cols[m] over object indices

  FormalContext() = default;
  FormalContext(std::vector<std::string> objs, std::vector<std::string> attrs,
                const std::vector<std::pair<std::size_t, std::size_t>>& incidence);

  static FormalContext from_labels(
      std::vector<std::string> objs, std::vector<std::string> attrs,
      const std::vector<std::pair<std::string, std::string>>& incidence);

  std::size_t object_count() const { return objects.size(); }
  std::size_t attribute_count() const { return attributes.size(); }
  bool incident(std::size_t g, std::size_t m) const { return rows[g].test(m); }

  std::optional<std::size_t> find_object(std::string_view label) const;
  std::optional<std::size_t> find_attribute(std::string_view label) const;
  std::size_t object_index(std::string_view label) const;     // InputError if unknown
  std::size_t attribute_index(std::string_view label) const;  // InputError if unknown

  // Derivation operators.  A ⊆ G yields the attributes common to all of A;
  // B ⊆ M yields the objects carrying all of B.  Empty sets derive to M / G.
  Bitset derive_objects(const Bitset& objs) const;
  Bitset derive_attributes(const Bitset& attrs) const;
  Bitset extent_closure(const Bitset& objs) const { return derive_attributes(derive_objects(objs)); }
  Bitset intent_closure(const Bitset& attrs) const { return derive_objects(derive_attributes(attrs)); }

  std::vector<std::pair<std::size_t, std::size_t>> incidence_pairs() const;

  Bitset object_set(const std::vector<std::string>& labels) const;     // InputError if unknown
  Bitset attribute_set(const std::vector<std::string>& labels) const;  // InputError if unknown
  std::vector<std::string> object_labels(const Bitset& objs) const;
  std::vector<std::string> attribute_labels(const Bitset& attrs) const;

 private:
  std::unordered_map<std::string, std::size_t> object_index_;
  std::unordered_map<std::string, std::size_t> attribute_index_;
};

// Label-level derivations.
std::vector<std::string> derive_objects(const FormalContext& ctx,
                                        const std::vector<std::string>& objs);
std::vector<std::string> derive_attributes(const FormalContext& ctx,
                                           const std::vector<std::string>& attrs);

enum class ClarifySide { Objects, Attributes, Both };

struct ClarifyResult {
  FormalContext context;
  // removed label -> kept representative (the lexicographically smallest
  // label of each group of identical rows/columns)
  std::map<std::string, std::string> object_merges;
  std::map<std::string, std::string> attribute_merges;
};

/// Merge objects (attributes) with identical derivations. The concept lattice
/// of the result is isomorphic to the input's.
ClarifyResult clarify(const FormalContext& ctx, ClarifySide side = ClarifySide::Both);

struct ReduceResult {
  FormalContext context;
  std::vector<std::string> removed_objects;     // input order
  std::vector<std::string> removed_attributes;  // input order
};

/// Clarify, then drop every object (attribute) whose row (column) is the
/// intersection of strictly larger rows (columns). The result is reduced and
/// its concept lattice is isomorphic to the input's.
ReduceResult reduce(const FormalContext& ctx);

// Subcontext K|_{H,N} with the incidence restricted to H×N; labels preserved.
FormalContext subcontext(const FormalContext& ctx, const Bitset& objs, const Bitset& attrs);
FormalContext subcontext(const FormalContext& ctx, const std::vector<std::string>& objs,
                         const std::vector<std::string>& attrs);

using LabelPair = std::pair<std::string, std::string>;

/// A subcontext candidate (H, N, J) given in parent labels. When derived from
/// a parent context, J ⊆ I ∩ (H×N).
struct SubcontextSpec {
  std::vector<std::string> objects;
  std::vector<std::string> attributes;
  std::vector<LabelPair> relation;
};

/// J ⊆ I is closed when every concept of (G,M,J) is a concept of (G,M,I).
/// Throws InputError when J is not a subset of the incidence.
bool is_closed_subrelation(const FormalContext& ctx, const std::vector<LabelPair>& relation);

/// (H,N,J) is a closed subcontext when J ⊆ I ∩ (H×N) and every concept of
/// (H,N,J) — compared by labels — is a concept of the parent. The empty
/// subcontext has the single concept (∅,∅), which is a concept of the parent
/// only when the parent is itself empty.
bool is_closed_subcontext(const FormalContext& ctx, const SubcontextSpec& spec);

}  // namespace fcadi
