#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "projtree/digraph.hpp"

namespace corpus {

using projtree::Arc;
using projtree::Digraph;

// Raw engine draws keep the corpus identical across platforms.
inline Digraph random_digraph(std::mt19937& rng, int n, int permille) {
  std::vector<Arc> arcs;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      if (static_cast<int>(rng() % 1000) < permille) arcs.push_back(Arc{i, j});
    }
  }
  return Digraph(n, std::move(arcs));
}

// 504 digraphs with n in 2..7 and densities swept from sparse to complete.
inline std::vector<Digraph> standard_corpus() {
  std::mt19937 rng(51234u);
  std::vector<Digraph> out;
  constexpr int kDensities[] = {150, 300, 450, 600, 750, 900, 1000};
  for (int n = 2; n <= 7; ++n)
    for (int d : kDensities)
      for (int rep = 0; rep < 12; ++rep) out.push_back(random_digraph(rng, n, d));
  return out;
}

inline std::vector<Digraph> small_sample(int count, int min_n, int max_n,
                                         unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<Digraph> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const int n =
        min_n + static_cast<int>(rng() % static_cast<unsigned>(max_n - min_n + 1));
    const int d = 100 + static_cast<int>(rng() % 900u);
    out.push_back(random_digraph(rng, n, d));
  }
  return out;
}

// All 2^(n choose 2) tournaments on n vertices.
inline std::vector<Digraph> all_tournaments(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) slots.emplace_back(i, j);
  std::vector<Digraph> out;
  out.reserve(std::size_t{1} << slots.size());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size());
       ++mask) {
    std::vector<Arc> arcs;
    arcs.reserve(slots.size());
    for (std::size_t p = 0; p < slots.size(); ++p)
      arcs.push_back((mask >> p) & 1 ? Arc{slots[p].first, slots[p].second}
                                     : Arc{slots[p].second, slots[p].first});
    out.push_back(Digraph(n, std::move(arcs)));
  }
  return out;
}

}  // namespace corpus
