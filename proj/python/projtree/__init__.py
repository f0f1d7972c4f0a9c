"""Projective spanning arborescence enumeration for digraphs."""

from projtree._core import (
    Digraph,
    LimitExceeded,
    ParseError,
    conflicting_pairs,
    count_arborescences,
    edge_index,
    edges_conflict,
    has_arborescence,
    maximal_projective_subgraphs,
    ordered_arcs,
    parse_adjacency_matrix,
    parse_arc_list,
    projective_arborescences,
    to_arc_list,
    to_dot,
)

__all__ = [
    "Digraph",
    "LimitExceeded",
    "ParseError",
    "conflicting_pairs",
    "count_arborescences",
    "edge_index",
    "edges_conflict",
    "has_arborescence",
    "maximal_projective_subgraphs",
    "ordered_arcs",
    "parse_adjacency_matrix",
    "parse_arc_list",
    "projective_arborescences",
    "to_arc_list",
    "to_dot",
]
