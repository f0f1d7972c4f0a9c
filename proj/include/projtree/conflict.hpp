#pragma once

#include <compare>
#include <cstddef>
#include <utility>
#include <vector>

#include "projtree/arcset.hpp"
#include "projtree/digraph.hpp"

namespace projtree {

/// True iff the spans properly cross: a.lo < b.lo < a.hi < b.hi or the
/// mirrored case. Nested, disjoint, and endpoint-sharing spans never
/// conflict, so directed paths stay conflict-free.
constexpr bool edges_conflict(Span a, Span b) {
  return (a.lo < b.lo && b.lo < a.hi && a.hi < b.hi) ||
         (b.lo < a.lo && a.lo < b.hi && b.hi < a.hi);
}

/// The edge order: by end vertex, then by beginning vertex.
constexpr std::strong_ordering lex_compare(Span a, Span b) { return a <=> b; }

/// Graph whose vertices are the arcs of a digraph (in canonical order) and
/// whose edges join conflicting arc pairs. Conflict-free arcs stay as
/// isolated vertices.
class ConflictGraph {
 public:
  ConflictGraph() = default;
  explicit ConflictGraph(std::vector<Arc> ordered_arcs);

  std::size_t arc_count() const { return arcs_.size(); }
  const std::vector<Arc>& arcs() const { return arcs_; }
  Arc arc_at(std::size_t index) const { return arcs_.at(index); }

  /// Adjacency of the conflict graph; symmetric, zero diagonal. 0-based.
  bool conflict(std::size_t i, std::size_t j) const {
    return rows_.at(i).test(j);
  }

  /// Row i of the adjacency matrix: all arcs conflicting with arc i.
  const ArcSet& conflicts_of(std::size_t i) const { return rows_.at(i); }

  /// All conflicting pairs (i, j) with i < j, 0-based, ascending.
  std::vector<std::pair<std::size_t, std::size_t>> conflicting_pairs() const;

 private:
  std::vector<Arc> arcs_;
  std::vector<ArcSet> rows_;
};

ConflictGraph build_conflict_graph(const Digraph& g);

/// 1-based rank of a span in the edge order of g's arcs: the number of arc
/// spans with an earlier end plus the number with the same end and a
/// beginning no later. Throws if no arc of g has this span.
std::size_t edge_index_K(const Digraph& g, Span e);

/// The first k arcs in the edge order, as an incidence vector. k may be 0
/// (empty set) up to the arc count (full set).
ArcSet edge_prefix(const ConflictGraph& cg, std::size_t k);

}  // namespace projtree
