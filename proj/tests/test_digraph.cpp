#include <doctest.h>

#include <algorithm>
#include <random>
#include <string>

#include "corpus.hpp"
#include "fixtures.hpp"
#include "projtree/digraph.hpp"

using namespace projtree;

namespace {

int parse_error_line(const std::string& text) {
  try {
    parse_arc_list(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_CASE("parse_arc_list reads header and arcs") {
  const Digraph g = parse_arc_list("n 3\n1 2\n2 3");
  CHECK(g.label_bound() == 3);
  CHECK(g.arcs() == std::vector<Arc>{{1, 2}, {2, 3}});
  CHECK(!g.root());
}

TEST_CASE("parse_arc_list reads the six-vertex sample") {
  const Digraph g = parse_arc_list("n 6\n2 3\n2 6\n3 6\n4 1\n4 2\n5 2\n5 4");
  CHECK(g.vertex_count() == 6);
  CHECK(g.arc_count() == 7);
  CHECK(g == fixtures::six_vertex());
}

TEST_CASE("parse_arc_list accepts comments, blanks, and a root") {
  const Digraph g = parse_arc_list("# header comment\n\nn 3 root 2\n1 2\n# mid\n2 3\n");
  CHECK(g.root() == 2);
  CHECK(g.arc_count() == 2);
}

TEST_CASE("parse_arc_list rejects bad input with line numbers") {
  CHECK(parse_error_line("n 2\n1 1") == 2);           // loop arc
  CHECK(parse_error_line("n 2\n1 2\n1 2") == 3);      // duplicate
  CHECK(parse_error_line("n 2\n1 3") == 2);           // vertex out of range
  CHECK(parse_error_line("n 2\n1 2 3") == 2);         // malformed line
  CHECK(parse_error_line("n 2\n1 x") == 2);           // non-integer
  CHECK(parse_error_line("1 2\n") == 1);              // missing header
  CHECK(parse_error_line("n 2 root 3\n1 2") == 1);    // root out of range
  CHECK_THROWS_AS((void)parse_arc_list("n 2\n1 1"), ParseError);
  CHECK_THROWS_WITH_AS((void)parse_arc_list(""), "line 1: missing header \"n <count>\"",
                       ParseError);
}

TEST_CASE("parse_adjacency_matrix matches the arc-list sample") {
  const Digraph g = parse_adjacency_matrix(fixtures::kSixVertexMatrix);
  CHECK(g == fixtures::six_vertex());
}

TEST_CASE("parse_adjacency_matrix handles small and bad matrices") {
  const Digraph empty2 = parse_adjacency_matrix("0 0\n0 0\n");
  CHECK(empty2.label_bound() == 2);
  CHECK(empty2.arc_count() == 0);

  CHECK_THROWS_AS((void)parse_adjacency_matrix("1 0 0\n0 0 0\n0 0 0\n"),
                  ParseError);  // nonzero diagonal
  CHECK_THROWS_AS((void)parse_adjacency_matrix("0 1\n0\n"), ParseError);
  CHECK_THROWS_AS((void)parse_adjacency_matrix("0 1\n2 0\n"), ParseError);
  CHECK_THROWS_AS((void)parse_adjacency_matrix("0 1\n"), ParseError);
  CHECK_THROWS_AS((void)parse_adjacency_matrix(""), ParseError);
}

TEST_CASE("arc-list round trip is the identity") {
  const auto sample = corpus::small_sample(40, 1, 7, 777u);
  for (const Digraph& g : sample) {
    CHECK(parse_arc_list(to_arc_list(g)) == g);
    CHECK(induced_subgraph(g, g.vertices()) == g);
  }
  const Digraph rooted = parse_arc_list("n 4 root 2\n1 2\n3 4\n");
  CHECK(parse_arc_list(to_arc_list(rooted)) == rooted);
}

TEST_CASE("induced_subgraph keeps labels and filters arcs") {
  const Digraph g = fixtures::six_vertex();
  const Digraph sub = induced_subgraph(g, {1, 2, 3, 6});
  CHECK(sub.vertices() == std::vector<int>{1, 2, 3, 6});
  CHECK(sub.arcs() == std::vector<Arc>{{2, 3}, {2, 6}, {3, 6}});
  CHECK(sub.label_bound() == 6);

  CHECK(induced_subgraph(g, g.vertices()) == g);
  CHECK(induced_subgraph(g, {}).vertex_count() == 0);
  CHECK_THROWS_AS((void)induced_subgraph(g, {7}), std::out_of_range);
}

TEST_CASE("subgraph_with_arcs keeps every vertex") {
  const Digraph g = fixtures::six_vertex();
  const Digraph sub =
      subgraph_with_arcs(g, std::vector<Arc>{{2, 3}, {4, 2}, {5, 2}, {2, 6}, {5, 4}});
  CHECK(sub.vertex_count() == 6);
  CHECK(sub.arc_count() == 5);

  CHECK(subgraph_with_arcs(g, g.arcs()) == g);
  CHECK(subgraph_with_arcs(g, std::vector<Arc>{}).arc_count() == 0);
  CHECK_THROWS_AS((void)subgraph_with_arcs(g, std::vector<Arc>{{1, 2}}),
                  std::invalid_argument);
}

TEST_CASE("to_dot output is deterministic and styled") {
  const Digraph one = Digraph(1, {});
  const std::string dot1 = to_dot(one);
  CHECK(dot1.find("digraph") != std::string::npos);
  CHECK(dot1.find("1;") != std::string::npos);
  CHECK(dot1.find("->") == std::string::npos);

  const Digraph g = fixtures::six_vertex();
  const std::string dot = to_dot(g);
  CHECK(std::count(dot.begin(), dot.end(), ';') == 6 + 7 + 1);  // + rankdir
  CHECK(dot == to_dot(g));

  const std::string marked = to_dot(g, std::vector<Arc>{{4, 1}});
  CHECK(marked.find("4 -> 1 [color=red,penwidth=2];") != std::string::npos);
  CHECK(marked.find("2 -> 3;") != std::string::npos);
}

TEST_CASE("digraph constructor validates its input") {
  CHECK_THROWS_AS(Digraph(2, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Digraph(2, {{1, 2}, {1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Digraph(2, {{1, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Digraph(2, {}, 3), std::invalid_argument);
  CHECK_THROWS_AS(Digraph(3, {2, 2}, {}, std::nullopt), std::invalid_argument);
}

TEST_CASE("canonical arc order sorts by span then tail") {
  const Digraph g = fixtures::six_vertex();
  CHECK(g.arcs() == std::vector<Arc>{{2, 3}, {4, 1}, {4, 2}, {5, 2}, {5, 4}, {2, 6}, {3, 6}});
  // Antiparallel arcs share a span; the smaller tail comes first.
  const Digraph two = Digraph(2, {{2, 1}, {1, 2}});
  CHECK(two.arcs() == std::vector<Arc>{{1, 2}, {2, 1}});
}

TEST_CASE("out_arcs and in_degree index the active vertices") {
  const Digraph g = fixtures::six_vertex();
  CHECK(g.out_arcs(5).size() == 2);
  CHECK(g.out_arcs(6).empty());
  CHECK(g.in_degree(2) == 2);
  CHECK(g.in_degree(5) == 0);
  CHECK_THROWS_AS((void)g.out_arcs(9), std::out_of_range);
}
