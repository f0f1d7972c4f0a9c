#pragma once

#include "projtree/digraph.hpp"

namespace fixtures {

using projtree::Arc;
using projtree::Digraph;

// Six-vertex, seven-arc sample whose linear drawing has exactly five edge
// crossings; used across the suites as the worked example.
inline constexpr const char* kSixVertexArcList =
    "n 6\n"
    "2 3\n"
    "2 6\n"
    "3 6\n"
    "4 1\n"
    "4 2\n"
    "5 2\n"
    "5 4\n";

inline constexpr const char* kSixVertexMatrix =
    "0 0 0 0 0 0\n"
    "0 0 1 0 0 1\n"
    "0 0 0 0 0 1\n"
    "1 1 0 0 0 0\n"
    "0 1 0 1 0 0\n"
    "0 0 0 0 0 0\n";

inline Digraph six_vertex() { return projtree::parse_arc_list(kSixVertexArcList); }

inline Digraph path3() { return Digraph(3, {{1, 2}, {2, 3}}); }

// Four spanning trees rooted at 1, of which three are projective.
inline Digraph fan4() {
  return Digraph(4, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}});
}

inline Digraph single_vertex() { return Digraph(1, {}); }

// Two mutually crossing arcs.
inline Digraph crossing_pair() { return Digraph(4, {{1, 3}, {2, 4}}); }

}  // namespace fixtures
