#pragma once

#include <cstddef>
#include <vector>

#include "projtree/digraph.hpp"

namespace projtree {

/// Rooted directed tree grown breadth-first. Generation k means every tree
/// vertex sits at depth <= k and only the depth-k vertices (the frontier)
/// may still acquire children; a frontier vertex that receives none becomes
/// a permanent leaf. Tree arcs are pairwise non-crossing.
struct PreTree {
  int root = 0;
  int generation = 0;
  std::vector<Arc> arcs;      // in the order the layers were added
  std::vector<int> depths;    // label-indexed, -1 = not in the tree
  std::vector<int> frontier;  // vertices at depth == generation, ascending
  int vertex_count = 0;

  bool contains(int v) const {
    return v >= 1 && v < static_cast<int>(depths.size()) && depths[v] >= 0;
  }

  /// Distance from the root; throws if the vertex is not in the tree.
  int depth_of(int v) const;

  bool spans(const Digraph& g) const {
    return vertex_count == static_cast<int>(g.vertex_count());
  }

  /// Tree arcs sorted by (head, tail): the canonical encoding used for
  /// deduplication and printed output.
  std::vector<Arc> canonical_arcs() const;
};

/// Residual graph behind the extendability test: the subgraph induced by the
/// uncovered vertices plus a synthetic source vertex with one arc to every
/// uncovered vertex reachable from the frontier in one step.
struct ExtensionGraph {
  Digraph graph;
  int star_vertex = 0;
};

/// Hook for observing pre-trees discarded by the extendability test.
struct GrowthObserver {
  virtual ~GrowthObserver() = default;
  virtual void on_pruned(const PreTree& /*rejected*/) {}
};

/// Generation 0: the root alone, provided the digraph has any spanning
/// arborescence rooted there; otherwise empty.
std::vector<PreTree> init_generation(const Digraph& g, int root);

/// Every admissible set of arcs that can extend the tree by one generation:
/// arcs from frontier vertices to distinct uncovered heads, pairwise
/// non-crossing and non-crossing with the tree arcs. Non-spanning trees get
/// only non-empty sets (a tree with none is a dead branch); a spanning tree
/// gets exactly the empty extension.
std::vector<std::vector<Arc>> frontier_extensions(const Digraph& g,
                                                  const PreTree& t);

/// Requires a non-spanning tree. The synthetic source gets the label
/// label_bound + 1.
ExtensionGraph build_extension_graph(const Digraph& g, const PreTree& t);

/// Whether the tree can still reach a spanning arborescence: spanning trees
/// trivially can; otherwise the extension graph must have a spanning
/// arborescence rooted at the synthetic source. Never prunes a branch that
/// can complete from its current frontier.
bool is_extendable(const Digraph& g, const PreTree& t);

struct GenerationStep {
  std::vector<PreTree> growing;   // extendable trees of the next generation
  std::vector<PreTree> spanning;  // finished spanning arborescences
};

/// Grows every tree by one generation. All inputs must share one generation.
/// Dead branches (no extension, not spanning) are dropped; trees failing the
/// extendability test are dropped and reported to the observer.
GenerationStep next_generation(const Digraph& g,
                               const std::vector<PreTree>& trees,
                               GrowthObserver* observer = nullptr);

enum class Strategy {
  direct,         // grow on the digraph itself
  via_subgraphs,  // grow within each maximal projective subgraph, then merge
};

/// All projective spanning arborescences rooted at `root`, canonically
/// ordered. Both strategies return the same set; `limit` (when nonzero)
/// bounds the number of result trees. The observer is consulted only by the
/// direct strategy.
std::vector<PreTree> enumerate_projective_arborescences(
    const Digraph& g, int root, Strategy strategy = Strategy::direct,
    std::size_t limit = 0, GrowthObserver* observer = nullptr);

}  // namespace projtree
