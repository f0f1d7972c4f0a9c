#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "projtree/arcset.hpp"
#include "projtree/conflict.hpp"
#include "projtree/digraph.hpp"

namespace projtree {

/// Raised when an enumeration would exceed a caller-supplied result bound.
class LimitExceeded : public std::runtime_error {
 public:
  explicit LimitExceeded(const std::string& message)
      : std::runtime_error(message) {}
};

/// All maximal non-crossing subsets of the first k arcs. Every member is
/// independent in the conflict graph restricted to that prefix and cannot be
/// grown within it; members are distinct and kept in index-lexicographic
/// order.
struct LevelSets {
  std::size_t k = 0;
  std::vector<ArcSet> sets;
};

/// B for step k+1: the arcs among the first k that do not conflict with arc
/// k+1 (0-based index k). Requires k < arc count.
ArcSet compatible_prefix(const ConflictGraph& cg, std::size_t k);

/// One step of the incremental construction, from the level for prefix k to
/// the level for prefix k+1. Traverses each member F:
///   - if F contains an arc conflicting with the new arc, F carries over
///     unchanged;
///   - if every compatible arc outside F conflicts with something in
///     F ∩ B (vacuously when B \ F is empty), (F ∩ B) ∪ {new arc} is added.
/// Duplicates are suppressed and the result is sorted. With `verify` set,
/// every emitted set is checked against is_maximal_noncrossing and a failure
/// raises std::logic_error rather than being repaired.
LevelSets extend_level(const ConflictGraph& cg, const LevelSets& level,
                       bool verify = false);

/// True iff f is independent in the conflict graph and every arc of the
/// first-k prefix outside f conflicts with some member. Requires f to lie
/// within the prefix.
bool is_maximal_noncrossing(const ConflictGraph& cg, const ArcSet& f,
                            std::size_t k);

/// All maximal non-crossing arc sets of the full arc set, i.e. the arc sets
/// of the maximal projective subgraphs. A digraph without arcs yields an
/// empty collection. `limit` (when nonzero) bounds the number of sets per
/// level; exceeding it raises LimitExceeded.
std::vector<ArcSet> enumerate_maximal_noncrossing_sets(const ConflictGraph& cg,
                                                       std::size_t limit = 0,
                                                       bool verify = false);
std::vector<ArcSet> enumerate_maximal_projective_subgraphs(
    const Digraph& g, std::size_t limit = 0, bool verify = false);

}  // namespace projtree
