#pragma once

#include <cstddef>
#include <vector>

#include "projtree/arcset.hpp"
#include "projtree/conflict.hpp"
#include "projtree/digraph.hpp"

namespace projtree {

// Exhaustive reference implementations for cross-checking. Exponential by
// design; capped by explicit size bounds. They share nothing with the main
// algorithms beyond the digraph type and the crossing predicate.

/// Every spanning arborescence rooted at `root`, found by trying one entering
/// arc per non-root vertex and keeping the acyclic, root-reaching choices.
/// Results are incidence vectors over g's arc order, sorted.
std::vector<ArcSet> brute_force_arborescences(const Digraph& g, int root,
                                              std::size_t max_vertices = 10);

/// brute_force_arborescences filtered to trees whose spans are pairwise
/// non-crossing.
std::vector<ArcSet> brute_force_projective_arborescences(
    const Digraph& g, int root, std::size_t max_vertices = 10);

/// Every maximal independent set of the conflict graph, via maximal-clique
/// expansion on the complement. A conflict graph without vertices yields an
/// empty collection, matching the incremental enumeration's convention.
std::vector<ArcSet> brute_force_maximal_independent_sets(
    const ConflictGraph& cg, std::size_t max_arcs = 20);

}  // namespace projtree
