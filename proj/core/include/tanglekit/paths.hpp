#pragma once

#include <span>
#include <vector>

#include "tanglekit/graph.hpp"

namespace tk {

/// A walk given by its vertex sequence and the edge ids between them.
/// A one-vertex path has no edges.
struct Path {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
  friend bool operator==(const Path&, const Path&) = default;
};

struct DisjointPaths {
  int count = 0;
  std::vector<Path> paths;  ///< sorted by first vertex
};

/// Maximum family of pairwise vertex-disjoint src-dst paths (Menger).
/// A vertex in src ∩ dst is a one-vertex path. Vertices listed in `avoid`
/// are treated as deleted.
DisjointPaths max_disjoint_paths(const MultiGraph& g, std::span<const VertexId> src,
                                 std::span<const VertexId> dst,
                                 std::span<const VertexId> avoid = {});

/// Maximum family of s-t paths sharing only their ends (distinct s, t).
/// Parallel s-t edges each count as a path.
DisjointPaths max_internally_disjoint_paths(const MultiGraph& g, VertexId s, VertexId t);

/// Maximum family of paths from v to dst that pairwise meet only in v, with
/// `avoid` deleted; stops early at `limit`. v must not be in dst.
DisjointPaths max_fan(const MultiGraph& g, VertexId v, std::span<const VertexId> dst,
                      std::span<const VertexId> avoid = {}, int limit = 1 << 30);

/// Number of pairwise edge-disjoint s-t paths, stopping early at `limit`.
int max_edge_disjoint_paths(const MultiGraph& g, VertexId s, VertexId t, int limit);

/// Source side of the leftmost minimum vertex cut between src and dst.
/// `interior` holds vertices whose whole neighbourhood lies on the source
/// side; `cut` is the minimum separator (|cut| equals the path count).
struct VertexCut {
  int size = 0;
  std::vector<VertexId> interior;
  std::vector<VertexId> cut;
};
VertexCut leftmost_min_vertex_cut(const MultiGraph& g, std::span<const VertexId> src,
                                  std::span<const VertexId> dst);

}  // namespace tk
