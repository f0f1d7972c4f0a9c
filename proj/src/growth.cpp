#include "projtree/growth.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "projtree/conflict.hpp"
#include "projtree/laplacian.hpp"
#include "projtree/mis.hpp"

namespace projtree {

namespace {

bool head_tail_less(Arc a, Arc b) {
  return std::pair(a.head, a.tail) < std::pair(b.head, b.tail);
}

// Orders canonical arc encodings; total on trees of one digraph.
struct CanonicalLess {
  bool operator()(const std::vector<Arc>& a, const std::vector<Arc>& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        head_tail_less);
  }
};

bool crosses_tree(const PreTree& t, Arc a) {
  const Span s = a.span();
  for (Arc e : t.arcs)
    if (edges_conflict(s, e.span())) return true;
  return false;
}

PreTree extend(const PreTree& t, const std::vector<Arc>& layer) {
  PreTree grown = t;
  grown.generation = t.generation + 1;
  grown.frontier.clear();
  for (Arc a : layer) {
    grown.arcs.push_back(a);
    grown.depths[static_cast<std::size_t>(a.head)] = grown.generation;
    grown.frontier.push_back(a.head);
    ++grown.vertex_count;
  }
  std::sort(grown.frontier.begin(), grown.frontier.end());
  return grown;
}

// Runs the generation loop to exhaustion, appending spanning trees.
void grow_all(const Digraph& g, int root, GrowthObserver* observer,
              const std::function<void(PreTree&&)>& sink) {
  std::vector<PreTree> working = init_generation(g, root);
  auto drain = [&](std::vector<PreTree>&& done) {
    for (PreTree& t : done) sink(std::move(t));
  };
  // A generation-0 tree already spans when the digraph has one vertex.
  std::vector<PreTree> growing;
  for (PreTree& t : working)
    if (t.spans(g))
      sink(std::move(t));
    else
      growing.push_back(std::move(t));
  while (!growing.empty()) {
    GenerationStep step = next_generation(g, growing, observer);
    drain(std::move(step.spanning));
    growing = std::move(step.growing);
  }
}

}  // namespace

int PreTree::depth_of(int v) const {
  if (!contains(v))
    throw std::out_of_range("PreTree: vertex " + std::to_string(v) +
                            " is not in the tree");
  return depths[static_cast<std::size_t>(v)];
}

std::vector<Arc> PreTree::canonical_arcs() const {
  std::vector<Arc> sorted = arcs;
  std::sort(sorted.begin(), sorted.end(), head_tail_less);
  return sorted;
}

std::vector<PreTree> init_generation(const Digraph& g, int root) {
  if (!g.has_vertex(root))
    throw std::out_of_range("init_generation: root " + std::to_string(root) +
                            " is not a vertex");
  if (!has_arborescence(g, root)) return {};
  PreTree t;
  t.root = root;
  t.generation = 0;
  t.depths.assign(static_cast<std::size_t>(g.label_bound()) + 1, -1);
  t.depths[static_cast<std::size_t>(root)] = 0;
  t.frontier = {root};
  t.vertex_count = 1;
  return {std::move(t)};
}

std::vector<std::vector<Arc>> frontier_extensions(const Digraph& g,
                                                  const PreTree& t) {
  std::vector<std::vector<Arc>> out;
  if (t.spans(g)) {
    out.emplace_back();
    return out;
  }
  std::vector<Arc> usable;
  for (int d : t.frontier)
    for (Arc a : g.out_arcs(d))
      if (!t.contains(a.head) && !crosses_tree(t, a)) usable.push_back(a);
  std::sort(usable.begin(), usable.end());

  std::vector<Arc> chosen;
  std::function<void(std::size_t)> visit = [&](std::size_t pos) {
    if (pos == usable.size()) {
      if (!chosen.empty()) out.push_back(chosen);
      return;
    }
    const Arc a = usable[pos];
    bool compatible = true;
    for (Arc c : chosen) {
      if (c.head == a.head || edges_conflict(c.span(), a.span())) {
        compatible = false;
        break;
      }
    }
    if (compatible) {
      chosen.push_back(a);
      visit(pos + 1);
      chosen.pop_back();
    }
    visit(pos + 1);
  };
  visit(0);
  return out;
}

ExtensionGraph build_extension_graph(const Digraph& g, const PreTree& t) {
  if (t.spans(g))
    throw std::invalid_argument(
        "build_extension_graph: pre-tree already spans the digraph");
  std::vector<int> remaining;
  for (int v : g.vertices())
    if (!t.contains(v)) remaining.push_back(v);

  const int star = g.label_bound() + 1;
  std::vector<int> attachable;
  for (int d : t.frontier)
    for (Arc a : g.out_arcs(d))
      if (!t.contains(a.head)) attachable.push_back(a.head);
  std::sort(attachable.begin(), attachable.end());
  attachable.erase(std::unique(attachable.begin(), attachable.end()),
                   attachable.end());

  Digraph base = induced_subgraph(g, remaining);
  std::vector<Arc> arcs(base.arcs().begin(), base.arcs().end());
  for (int z : attachable) arcs.push_back(Arc{star, z});

  std::vector<int> vertices = remaining;
  vertices.push_back(star);
  return ExtensionGraph{Digraph(star, std::move(vertices), std::move(arcs), star),
                        star};
}

bool is_extendable(const Digraph& g, const PreTree& t) {
  if (t.spans(g)) return true;
  const ExtensionGraph ext = build_extension_graph(g, t);
  return has_arborescence(ext.graph, ext.star_vertex);
}

GenerationStep next_generation(const Digraph& g,
                               const std::vector<PreTree>& trees,
                               GrowthObserver* observer) {
  GenerationStep step;
  if (trees.empty()) return step;
  const int generation = trees.front().generation;
  for (const PreTree& t : trees)
    if (t.generation != generation)
      throw std::invalid_argument("next_generation: mixed generations");

  for (const PreTree& t : trees) {
    if (t.spans(g)) {
      step.spanning.push_back(t);
      continue;
    }
    for (const std::vector<Arc>& layer : frontier_extensions(g, t)) {
      PreTree grown = extend(t, layer);
      if (grown.spans(g))
        step.spanning.push_back(std::move(grown));
      else if (is_extendable(g, grown))
        step.growing.push_back(std::move(grown));
      else if (observer)
        observer->on_pruned(grown);
    }
  }
  return step;
}

std::vector<PreTree> enumerate_projective_arborescences(const Digraph& g,
                                                        int root,
                                                        Strategy strategy,
                                                        std::size_t limit,
                                                        GrowthObserver* observer) {
  if (!g.has_vertex(root))
    throw std::out_of_range("enumerate_projective_arborescences: root " +
                            std::to_string(root) + " is not a vertex");
  auto check_limit = [&](std::size_t have) {
    if (limit != 0 && have > limit)
      throw LimitExceeded("tree enumeration exceeded limit of " +
                          std::to_string(limit) + " trees");
  };

  // Without arcs there are no maximal subgraphs to grow in, yet a
  // single-vertex digraph still has its empty spanning tree; the direct layer
  // loop covers both degenerate outcomes.
  if (strategy == Strategy::direct || g.arc_count() == 0) {
    std::vector<PreTree> results;
    grow_all(g, root, observer, [&](PreTree&& t) {
      results.push_back(std::move(t));
      check_limit(results.size());
    });
    std::sort(results.begin(), results.end(),
              [](const PreTree& a, const PreTree& b) {
                return CanonicalLess{}(a.canonical_arcs(), b.canonical_arcs());
              });
    return results;
  }

  // Within a maximal projective subgraph all arcs are pairwise non-crossing,
  // so the growth enumerates all its spanning arborescences; one projective
  // tree can lie in several maximal subgraphs, hence the keyed merge.
  std::map<std::vector<Arc>, PreTree, CanonicalLess> merged;
  for (const ArcSet& sub : enumerate_maximal_projective_subgraphs(g, limit)) {
    const Digraph h = subgraph_with_arcs(g, sub);
    grow_all(h, root, nullptr, [&](PreTree&& t) {
      merged.try_emplace(t.canonical_arcs(), std::move(t));
      check_limit(merged.size());
    });
  }
  std::vector<PreTree> results;
  results.reserve(merged.size());
  for (auto& [key, tree] : merged) results.push_back(std::move(tree));
  return results;
}

}  // namespace projtree
