#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "projtree/digraph.hpp"

namespace projtree {

/// In-degree Laplacian over the active vertices: the diagonal matrix of
/// in-degrees minus the adjacency matrix. Row/column positions follow the
/// ascending vertex labels; every column sums to zero.
struct InDegreeLaplacian {
  std::vector<int> vertices;        // ascending active labels
  std::vector<long> entries;        // row-major, size n*n

  std::size_t size() const { return vertices.size(); }
  long at(std::size_t i, std::size_t j) const {
    return entries[i * vertices.size() + j];
  }
  /// Matrix position of a vertex label; throws if absent.
  std::size_t position_of(int label) const;
};

InDegreeLaplacian in_degree_laplacian(const Digraph& g);

/// Determinant of the Laplacian with row and column `drop` removed, computed
/// by fraction-free (Bareiss) elimination in exact integer arithmetic.
mpz_class principal_cofactor(const InDegreeLaplacian& laplacian,
                             std::size_t drop);

/// Number of spanning arborescences rooted at `root` (all arcs directed away
/// from the root): the (root, root) cofactor of the in-degree Laplacian.
/// A one-vertex digraph has exactly one, the empty arborescence.
mpz_class count_arborescences(const Digraph& g, int root);

/// Whether at least one spanning arborescence rooted at `root` exists.
bool has_arborescence(const Digraph& g, int root);

}  // namespace projtree
