#include "projtree/mis.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

namespace projtree {

ArcSet compatible_prefix(const ConflictGraph& cg, std::size_t k) {
  if (k >= cg.arc_count())
    throw std::out_of_range("compatible_prefix: no arc with index " +
                            std::to_string(k + 1));
  return edge_prefix(cg, k).minus(cg.conflicts_of(k));
}

bool is_maximal_noncrossing(const ConflictGraph& cg, const ArcSet& f,
                            std::size_t k) {
  ArcSet prefix = edge_prefix(cg, k);
  if (!f.is_subset_of(prefix))
    throw std::invalid_argument(
        "is_maximal_noncrossing: set is not within the first " +
        std::to_string(k) + " arcs");
  for (std::size_t i : f.indices())
    if (cg.conflicts_of(i).intersects(f)) return false;
  for (std::size_t l : prefix.minus(f).indices())
    if (!cg.conflicts_of(l).intersects(f)) return false;
  return true;
}

LevelSets extend_level(const ConflictGraph& cg, const LevelSets& level,
                       bool verify) {
  if (level.k >= cg.arc_count())
    throw std::invalid_argument("extend_level: level is already complete");
  const std::size_t next = level.k;  // 0-based index of the arc being added
  const ArcSet compatible = compatible_prefix(cg, level.k);

  LevelSets out;
  out.k = level.k + 1;
  std::unordered_set<ArcSet, ArcSetHash> seen;
  auto emit = [&](ArcSet s) {
    if (seen.insert(s).second) out.sets.push_back(std::move(s));
  };

  for (const ArcSet& f : level.sets) {
    if (!f.is_subset_of(compatible)) emit(f);
    ArcSet core = f & compatible;
    bool covers = true;
    for (std::size_t l : compatible.minus(f).indices()) {
      if (!cg.conflicts_of(l).intersects(core)) {
        covers = false;
        break;
      }
    }
    if (covers) {
      core.set(next);
      emit(std::move(core));
    }
  }

  std::sort(out.sets.begin(), out.sets.end(), index_lexicographic_less);
  if (verify) {
    for (const ArcSet& s : out.sets)
      if (!is_maximal_noncrossing(cg, s, out.k))
        throw std::logic_error(
            "extend_level: emitted a set that is not maximal non-crossing at "
            "level " +
            std::to_string(out.k));
  }
  return out;
}

std::vector<ArcSet> enumerate_maximal_noncrossing_sets(const ConflictGraph& cg,
                                                       std::size_t limit,
                                                       bool verify) {
  const std::size_t m = cg.arc_count();
  if (m == 0) return {};
  LevelSets level;
  level.k = 1;
  level.sets.push_back(ArcSet::of(m, {0}));
  for (std::size_t k = 1; k < m; ++k) {
    level = extend_level(cg, level, verify);
    if (limit != 0 && level.sets.size() > limit)
      throw LimitExceeded("maximal set enumeration exceeded limit of " +
                          std::to_string(limit) + " sets at prefix " +
                          std::to_string(level.k));
  }
  return level.sets;
}

std::vector<ArcSet> enumerate_maximal_projective_subgraphs(const Digraph& g,
                                                           std::size_t limit,
                                                           bool verify) {
  return enumerate_maximal_noncrossing_sets(build_conflict_graph(g), limit,
                                            verify);
}

}  // namespace projtree
