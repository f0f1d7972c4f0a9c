#include "projtree/laplacian.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace projtree {

namespace {

// Bareiss fraction-free elimination; every intermediate value is an exact
// integer minor, so no overflow is possible with arbitrary precision.
mpz_class bareiss_determinant(std::vector<mpz_class> m, std::size_t n) {
  if (n == 0) return 1;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k * n + k] == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && m[pivot * n + k] == 0) ++pivot;
      if (pivot == n) return 0;
      for (std::size_t j = 0; j < n; ++j)
        std::swap(m[k * n + j], m[pivot * n + j]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class num = m[i * n + j] * m[k * n + k] - m[i * n + k] * m[k * n + j];
        mpz_divexact(m[i * n + j].get_mpz_t(), num.get_mpz_t(),
                     prev.get_mpz_t());
      }
    }
    prev = m[k * n + k];
  }
  return sign > 0 ? m[n * n - 1] : mpz_class(-m[n * n - 1]);
}

}  // namespace

std::size_t InDegreeLaplacian::position_of(int label) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), label);
  if (it == vertices.end() || *it != label)
    throw std::out_of_range("InDegreeLaplacian: vertex " +
                            std::to_string(label) + " is not present");
  return static_cast<std::size_t>(it - vertices.begin());
}

InDegreeLaplacian in_degree_laplacian(const Digraph& g) {
  InDegreeLaplacian lap;
  lap.vertices = g.vertices();
  const std::size_t n = lap.vertices.size();
  lap.entries.assign(n * n, 0);
  for (Arc a : g.arcs()) {
    const std::size_t t = lap.position_of(a.tail);
    const std::size_t h = lap.position_of(a.head);
    lap.entries[h * n + h] += 1;
    lap.entries[t * n + h] -= 1;
  }
  return lap;
}

mpz_class principal_cofactor(const InDegreeLaplacian& laplacian,
                             std::size_t drop) {
  const std::size_t n = laplacian.size();
  if (drop >= n)
    throw std::out_of_range("principal_cofactor: index out of range");
  std::vector<mpz_class> minor;
  minor.reserve((n - 1) * (n - 1));
  for (std::size_t i = 0; i < n; ++i) {
    if (i == drop) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == drop) continue;
      minor.emplace_back(laplacian.at(i, j));
    }
  }
  return bareiss_determinant(std::move(minor), n - 1);
}

mpz_class count_arborescences(const Digraph& g, int root) {
  if (!g.has_vertex(root))
    throw std::out_of_range("count_arborescences: root " +
                            std::to_string(root) + " is not a vertex");
  const InDegreeLaplacian lap = in_degree_laplacian(g);
  return principal_cofactor(lap, lap.position_of(root));
}

bool has_arborescence(const Digraph& g, int root) {
  return count_arborescences(g, root) > 0;
}

}  // namespace projtree
