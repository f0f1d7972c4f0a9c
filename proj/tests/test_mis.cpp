#include <doctest.h>

#include <algorithm>
#include <vector>

#include "corpus.hpp"
#include "fixtures.hpp"
#include "projtree/mis.hpp"
#include "projtree/oracle.hpp"

using namespace projtree;

namespace {

// Arc indices of the six-vertex sample, in edge order:
//   0:{2,3} 1:{1,4} 2:{2,4} 3:{2,5} 4:{4,5} 5:{2,6} 6:{3,6}
std::vector<ArcSet> six_vertex_maximal_sets() {
  return {ArcSet::of(7, {0, 1, 2, 4}), ArcSet::of(7, {0, 2, 3, 4, 5}),
          ArcSet::of(7, {0, 4, 5, 6})};
}

LevelSets run_levels(const ConflictGraph& cg, std::size_t upto, bool verify) {
  LevelSets level;
  level.k = 1;
  level.sets.push_back(ArcSet::of(cg.arc_count(), {0}));
  while (level.k < upto) level = extend_level(cg, level, verify);
  return level;
}

}  // namespace

TEST_CASE("compatible_prefix picks the non-conflicting prefix arcs") {
  const ConflictGraph cg = build_conflict_graph(fixtures::six_vertex());
  CHECK(compatible_prefix(cg, 0).none());
  CHECK(compatible_prefix(cg, 1) == ArcSet::of(7, {0}));       // vs {1,4}
  CHECK(compatible_prefix(cg, 6) == ArcSet::of(7, {0, 4, 5}));  // vs {3,6}
  CHECK_THROWS_AS((void)compatible_prefix(cg, 7), std::out_of_range);
}

TEST_CASE("extend_level builds the six-vertex ladder") {
  const ConflictGraph cg = build_conflict_graph(fixtures::six_vertex());
  LevelSets level;
  level.k = 1;
  level.sets.push_back(ArcSet::of(7, {0}));
  for (std::size_t k = 1; k < 7; ++k) {
    level = extend_level(cg, level, /*verify=*/true);
    CHECK(level.k == k + 1);
    CHECK(!level.sets.empty());
    for (const ArcSet& s : level.sets)
      CHECK(is_maximal_noncrossing(cg, s, level.k));
  }
  CHECK(level.sets == six_vertex_maximal_sets());
}

TEST_CASE("extend_level keeps one set on conflict-free graphs") {
  const ConflictGraph cg = build_conflict_graph(fixtures::path3());
  const LevelSets final_level = run_levels(cg, cg.arc_count(), true);
  CHECK(final_level.sets.size() == 1);
  CHECK(final_level.sets[0].count() == cg.arc_count());
}

TEST_CASE("enumerate_maximal_projective_subgraphs on the samples") {
  const auto sets = enumerate_maximal_projective_subgraphs(fixtures::six_vertex());
  REQUIRE(sets.size() == 3);
  CHECK(sets[0].count() == 4);
  CHECK(sets[1].count() == 5);
  CHECK(sets[2].count() == 4);
  CHECK(sets == six_vertex_maximal_sets());

  const auto path_sets = enumerate_maximal_projective_subgraphs(fixtures::path3());
  REQUIRE(path_sets.size() == 1);
  CHECK(path_sets[0].count() == 2);

  const auto crossing = enumerate_maximal_projective_subgraphs(fixtures::crossing_pair());
  REQUIRE(crossing.size() == 2);
  CHECK(crossing[0] == ArcSet::of(2, {0}));
  CHECK(crossing[1] == ArcSet::of(2, {1}));

  CHECK(enumerate_maximal_projective_subgraphs(Digraph(3, {})).empty());
}

TEST_CASE("is_maximal_noncrossing examples") {
  const ConflictGraph cg = build_conflict_graph(fixtures::six_vertex());
  CHECK(is_maximal_noncrossing(cg, ArcSet::of(7, {0, 1, 2, 4}), 7));
  CHECK(!is_maximal_noncrossing(cg, ArcSet::of(7, {0}), 7));
  CHECK(is_maximal_noncrossing(build_conflict_graph(Digraph(2, {})), ArcSet(0), 0));
  CHECK_THROWS_AS((void)is_maximal_noncrossing(cg, ArcSet::of(7, {3}), 2),
                  std::invalid_argument);
}

TEST_CASE("incremental enumeration matches the brute-force oracle") {
  auto check_graph = [](const Digraph& g) {
    const ConflictGraph cg = build_conflict_graph(g);
    const auto mine = enumerate_maximal_noncrossing_sets(cg, 0, true);
    const auto oracle = brute_force_maximal_independent_sets(cg, 64);
    CHECK(mine == oracle);  // both sorted index-lexicographically
    for (std::size_t i = 1; i < mine.size(); ++i) CHECK(!(mine[i - 1] == mine[i]));
  };
  for (const Digraph& g : corpus::small_sample(150, 2, 6, 31337u)) check_graph(g);
  for (int n = 2; n <= 5; ++n)
    for (const Digraph& g : corpus::all_tournaments(n)) check_graph(g);
}

TEST_CASE("enumeration respects the limit guard") {
  CHECK_THROWS_AS(
      (void)enumerate_maximal_projective_subgraphs(fixtures::six_vertex(), 1),
      LimitExceeded);
  // A generous limit changes nothing.
  CHECK(enumerate_maximal_projective_subgraphs(fixtures::six_vertex(), 100).size() == 3);
}
