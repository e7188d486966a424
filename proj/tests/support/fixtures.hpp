#pragma once

#include <random>
#include <utility>
#include <vector>

#include "tanglekit/graph.hpp"

namespace fixture {

/// G(n, p) on vertices 0..n-1.
inline tk::MultiGraph random_graph(std::mt19937& rng, int n, double p) {
  std::vector<std::pair<tk::VertexId, tk::VertexId>> pairs;
  std::bernoulli_distribution coin(p);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) pairs.emplace_back(i, j);
  return tk::MultiGraph::from_edge_pairs(n, pairs);
}

}  // namespace fixture
