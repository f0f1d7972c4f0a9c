#include "projtree/oracle.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace projtree {

namespace {

// Follows tail-ward parent pointers from every vertex, checking that each
// chain reaches the root without revisiting an in-progress vertex.
bool is_arborescence(const std::vector<int>& vertices, int root,
                     const std::vector<int>& parent, int label_bound) {
  enum : char { kUnseen = 0, kActive = 1, kDone = 2 };
  std::vector<char> state(static_cast<std::size_t>(label_bound) + 1, kUnseen);
  state[static_cast<std::size_t>(root)] = kDone;
  for (int start : vertices) {
    int v = start;
    while (state[static_cast<std::size_t>(v)] == kUnseen) {
      state[static_cast<std::size_t>(v)] = kActive;
      v = parent[static_cast<std::size_t>(v)];
    }
    if (state[static_cast<std::size_t>(v)] == kActive) return false;  // cycle
    v = start;
    while (state[static_cast<std::size_t>(v)] == kActive) {
      state[static_cast<std::size_t>(v)] = kDone;
      v = parent[static_cast<std::size_t>(v)];
    }
  }
  return true;
}

}  // namespace

std::vector<ArcSet> brute_force_arborescences(const Digraph& g, int root,
                                              std::size_t max_vertices) {
  if (g.vertex_count() > max_vertices)
    throw std::invalid_argument(
        "brute_force_arborescences: vertex count exceeds bound " +
        std::to_string(max_vertices));
  if (!g.has_vertex(root))
    throw std::out_of_range("brute_force_arborescences: root " +
                            std::to_string(root) + " is not a vertex");

  std::vector<int> others;
  for (int v : g.vertices())
    if (v != root) others.push_back(v);

  // Candidate entering arcs per non-root vertex, as indices into g.arcs().
  std::vector<std::vector<std::size_t>> entering(others.size());
  const auto& arcs = g.arcs();
  for (std::size_t i = 0; i < others.size(); ++i) {
    for (std::size_t j = 0; j < arcs.size(); ++j)
      if (arcs[j].head == others[i]) entering[i].push_back(j);
    if (entering[i].empty()) return {};
  }

  std::vector<ArcSet> found;
  std::vector<std::size_t> choice(others.size(), 0);
  std::vector<int> parent(static_cast<std::size_t>(g.label_bound()) + 1, 0);
  while (true) {
    for (std::size_t i = 0; i < others.size(); ++i)
      parent[static_cast<std::size_t>(others[i])] =
          arcs[entering[i][choice[i]]].tail;
    if (is_arborescence(others, root, parent, g.label_bound())) {
      ArcSet tree(arcs.size());
      for (std::size_t i = 0; i < others.size(); ++i)
        tree.set(entering[i][choice[i]]);
      found.push_back(std::move(tree));
    }
    std::size_t pos = 0;
    while (pos < others.size() && ++choice[pos] == entering[pos].size())
      choice[pos++] = 0;
    if (pos == others.size()) break;
  }
  std::sort(found.begin(), found.end(), index_lexicographic_less);
  return found;
}

std::vector<ArcSet> brute_force_projective_arborescences(
    const Digraph& g, int root, std::size_t max_vertices) {
  std::vector<ArcSet> projective;
  for (ArcSet& tree : brute_force_arborescences(g, root, max_vertices)) {
    const std::vector<std::size_t> members = tree.indices();
    bool crossing_free = true;
    for (std::size_t i = 0; i < members.size() && crossing_free; ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j)
        if (edges_conflict(g.arcs()[members[i]].span(),
                           g.arcs()[members[j]].span())) {
          crossing_free = false;
          break;
        }
    if (crossing_free) projective.push_back(std::move(tree));
  }
  return projective;
}

std::vector<ArcSet> brute_force_maximal_independent_sets(
    const ConflictGraph& cg, std::size_t max_arcs) {
  const std::size_t m = cg.arc_count();
  if (m > max_arcs)
    throw std::invalid_argument(
        "brute_force_maximal_independent_sets: arc count exceeds bound " +
        std::to_string(max_arcs));
  if (m == 0) return {};

  // Maximal independent sets of the conflict graph are maximal cliques of
  // its complement; enumerate those with Bron-Kerbosch pivoting.
  std::vector<ArcSet> compatible(m, ArcSet(m));
  ArcSet all(m);
  for (std::size_t i = 0; i < m; ++i) all.set(i);
  for (std::size_t i = 0; i < m; ++i) {
    compatible[i] = all.minus(cg.conflicts_of(i));
    compatible[i].reset(i);
  }

  std::vector<ArcSet> found;
  std::function<void(ArcSet, ArcSet, ArcSet)> expand =
      [&](ArcSet chosen, ArcSet candidates, ArcSet excluded) {
        if (candidates.none() && excluded.none()) {
          found.push_back(std::move(chosen));
          return;
        }
        std::size_t pivot = m;
        std::size_t best = 0;
        for (std::size_t u : (candidates | excluded).indices()) {
          const std::size_t reach = (candidates & compatible[u]).count();
          if (pivot == m || reach > best) {
            pivot = u;
            best = reach;
          }
        }
        for (std::size_t v : candidates.minus(compatible[pivot]).indices()) {
          ArcSet next = chosen;
          next.set(v);
          expand(std::move(next), candidates & compatible[v],
                 excluded & compatible[v]);
          candidates.reset(v);
          excluded.set(v);
        }
      };
  expand(ArcSet(m), all, ArcSet(m));
  std::sort(found.begin(), found.end(), index_lexicographic_less);
  return found;
}

}  // namespace projtree
