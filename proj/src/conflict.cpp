#include "projtree/conflict.hpp"

#include <stdexcept>
#include <string>

namespace projtree {

ConflictGraph::ConflictGraph(std::vector<Arc> ordered_arcs)
    : arcs_(std::move(ordered_arcs)) {
  const std::size_t m = arcs_.size();
  rows_.assign(m, ArcSet(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (edges_conflict(arcs_[i].span(), arcs_[j].span())) {
        rows_[i].set(j);
        rows_[j].set(i);
      }
    }
  }
}

std::vector<std::pair<std::size_t, std::size_t>>
ConflictGraph::conflicting_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < arcs_.size(); ++i)
    for (std::size_t j : rows_[i].indices())
      if (j > i) pairs.emplace_back(i, j);
  return pairs;
}

ConflictGraph build_conflict_graph(const Digraph& g) {
  return ConflictGraph(g.arcs());
}

std::size_t edge_index_K(const Digraph& g, Span e) {
  bool present = false;
  std::size_t rank = 0;
  for (Arc a : g.arcs()) {
    Span s = a.span();
    if (s == e) present = true;
    if (s.hi < e.hi || (s.hi == e.hi && s.lo <= e.lo)) ++rank;
  }
  if (!present)
    throw std::invalid_argument("edge_index_K: no arc spans {" +
                                std::to_string(e.lo) + ", " +
                                std::to_string(e.hi) + "}");
  return rank;
}

ArcSet edge_prefix(const ConflictGraph& cg, std::size_t k) {
  if (k > cg.arc_count())
    throw std::out_of_range("edge_prefix: k = " + std::to_string(k) +
                            " exceeds arc count " +
                            std::to_string(cg.arc_count()));
  return ArcSet::first(cg.arc_count(), k);
}

}  // namespace projtree
