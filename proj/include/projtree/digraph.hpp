#pragma once

#include <compare>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "projtree/arcset.hpp"

namespace projtree {

/// Undirected extent of an arc on the vertex line; always lo < hi.
struct Span {
  int lo = 0;
  int hi = 0;

  friend constexpr bool operator==(Span, Span) = default;

  /// Edge order: by end vertex first, then by beginning vertex.
  friend constexpr std::strong_ordering operator<=>(Span a, Span b) {
    if (auto c = a.hi <=> b.hi; c != 0) return c;
    return a.lo <=> b.lo;
  }
};

/// Directed arc tail -> head over 1-based vertex labels.
struct Arc {
  int tail = 0;
  int head = 0;

  constexpr Span span() const {
    return tail < head ? Span{tail, head} : Span{head, tail};
  }

  friend constexpr bool operator==(Arc, Arc) = default;

  /// Canonical arc order: span order, antiparallel twins broken by tail.
  friend constexpr std::strong_ordering operator<=>(Arc a, Arc b) {
    if (auto c = a.span() <=> b.span(); c != 0) return c;
    return a.tail <=> b.tail;
  }
};

/// Error raised by the text parsers; carries the 1-based input line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

/// Simple loop-free digraph over vertices labeled 1..label_bound. The active
/// vertex set may be a subset of the label range (induced subgraphs keep
/// their original labels, since the linear vertex order is positional).
/// Arcs are stored deduplicated in the canonical edge order.
class Digraph {
 public:
  Digraph() = default;

  /// Digraph on vertices 1..n.
  Digraph(int n, std::vector<Arc> arcs, std::optional<int> root = std::nullopt);

  /// Digraph on an explicit vertex subset of 1..label_bound.
  Digraph(int label_bound, std::vector<int> vertices, std::vector<Arc> arcs,
          std::optional<int> root = std::nullopt);

  int label_bound() const { return label_bound_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t arc_count() const { return arcs_.size(); }
  const std::vector<int>& vertices() const { return vertices_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  std::optional<int> root() const { return root_; }

  /// True when the active vertices are exactly 1..label_bound.
  bool contiguous() const {
    return static_cast<int>(vertices_.size()) == label_bound_;
  }

  bool has_vertex(int v) const {
    return v >= 1 && v <= label_bound_ && active_[static_cast<std::size_t>(v)];
  }

  bool has_arc(Arc a) const;

  /// 0-based position of an arc in the canonical order; throws if absent.
  std::size_t arc_index(Arc a) const;

  std::span<const Arc> out_arcs(int v) const;

  int in_degree(int v) const;

  /// Incidence vector over this digraph's canonical arc order; every listed
  /// arc must be present.
  ArcSet arc_subset(const std::vector<Arc>& subset) const;

  /// Arcs selected by an incidence vector over this digraph's arc order.
  std::vector<Arc> arcs_of(const ArcSet& subset) const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.label_bound_ == b.label_bound_ && a.vertices_ == b.vertices_ &&
           a.arcs_ == b.arcs_ && a.root_ == b.root_;
  }

 private:
  void validate_and_index();

  int label_bound_ = 0;
  std::vector<int> vertices_;
  std::vector<Arc> arcs_;
  std::optional<int> root_;
  std::vector<bool> active_;               // label-indexed, slot 0 unused
  std::vector<std::vector<Arc>> out_;      // label-indexed
  std::vector<int> in_degree_;             // label-indexed
};

/// Parses the arc-list format: a header line "n <count> [root <r>]" followed
/// by one "<tail> <head>" line per arc. Lines whose first token starts with
/// '#' are comments; blank lines are ignored.
Digraph parse_arc_list(std::string_view text);

/// Parses an n x n 0/1 adjacency matrix, one row per line; entry (i, j) = 1
/// means an arc i -> j. The diagonal must be zero.
Digraph parse_adjacency_matrix(std::string_view text);

/// Serializes to the arc-list format. Requires a contiguous vertex set.
std::string to_arc_list(const Digraph& g);

/// Subgraph induced by `keep` (labels preserved): the kept vertices plus
/// every arc with both endpoints kept. The root survives only if kept.
Digraph induced_subgraph(const Digraph& g, const std::vector<int>& keep);

/// Subgraph with all of g's vertices and exactly the given arcs.
Digraph subgraph_with_arcs(const Digraph& g, const std::vector<Arc>& arcs);
Digraph subgraph_with_arcs(const Digraph& g, const ArcSet& arcs);

/// Deterministic DOT rendering; highlighted arcs are styled distinctly.
std::string to_dot(const Digraph& g, const std::vector<Arc>& highlight = {});
std::string to_dot(const Digraph& g, const ArcSet& highlight);

}  // namespace projtree
