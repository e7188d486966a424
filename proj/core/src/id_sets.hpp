#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <vector>

#include "tanglekit/graph.hpp"

namespace tk::detail {

inline std::vector<VertexId> sorted_ids(std::span<const VertexId> xs) {
  std::vector<VertexId> out(xs.begin(), xs.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline void check_vertices(const MultiGraph& g, std::span<const VertexId> xs) {
  for (VertexId v : xs)
    if (!g.has_vertex(v)) throw InputError("unknown vertex id " + std::to_string(v));
}

inline bool contains(const std::vector<VertexId>& sorted, VertexId v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

inline bool includes(const std::vector<int>& big, const std::vector<int>& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace tk::detail
