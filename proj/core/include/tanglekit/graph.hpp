#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "tanglekit/error.hpp"

namespace tk {

using VertexId = int;
using EdgeId = int;

struct Edge {
  EdgeId id = 0;
  VertexId u = 0;
  VertexId v = 0;

  bool is_loop() const { return u == v; }
  VertexId other(VertexId x) const { return x == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Vertex and edge ids of a subgraph of some host graph; both lists sorted.
struct SubgraphRef {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  bool empty() const { return vertices.empty() && edges.empty(); }
  friend bool operator==(const SubgraphRef&, const SubgraphRef&) = default;
  friend auto operator<=>(const SubgraphRef&, const SubgraphRef&) = default;
};

/// Finite graph with loops and parallel edges. Immutable after construction.
///
/// Vertex ids are arbitrary non-negative integers (kept sorted); edge ids are
/// unique integers, and every certificate refers to edges by id so parallel
/// edges stay distinguishable. Internally each vertex and edge also has a
/// dense index used by the search code.
class MultiGraph {
 public:
  MultiGraph() = default;
  MultiGraph(std::vector<VertexId> vertices, std::vector<Edge> edges);

  /// Vertices 0..n-1 and edges given as endpoint pairs with ids 0..m-1.
  static MultiGraph from_edge_pairs(int n, std::span<const std::pair<VertexId, VertexId>> pairs);

  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  bool has_vertex(VertexId v) const;
  bool has_edge(EdgeId e) const;
  /// Dense index of a vertex; throws InputError for unknown ids.
  int vertex_index(VertexId v) const;
  int edge_index(EdgeId e) const;
  const Edge& edge(EdgeId e) const { return edges_[edge_index(e)]; }

  /// Edge indices incident with the vertex at dense index `vi`; loops appear twice.
  std::span<const int> incident(int vi) const { return incidence_[vi]; }
  int degree(VertexId v) const { return static_cast<int>(incidence_[vertex_index(v)].size()); }
  /// Distinct neighbours other than v itself, sorted.
  std::vector<VertexId> neighbors(VertexId v) const;
  int max_degree() const;

  bool is_connected() const;
  /// Connected components as sorted vertex lists, ordered by smallest vertex.
  std::vector<std::vector<VertexId>> components() const;

  friend bool operator==(const MultiGraph& a, const MultiGraph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> incidence_;
};

/// G[X]: all of `xs` plus every edge with both ends in `xs`.
SubgraphRef induced_subgraph(const MultiGraph& g, std::span<const VertexId> xs);

/// Throws InputError unless `ref` names a subgraph of `g`.
void validate_subgraph(const MultiGraph& g, const SubgraphRef& ref);

/// The subgraph as a standalone graph keeping the host's ids.
MultiGraph materialize(const MultiGraph& g, const SubgraphRef& ref);

/// The whole graph as a SubgraphRef.
SubgraphRef whole(const MultiGraph& g);

/// G - Z: deletes the vertices and every incident edge.
MultiGraph delete_vertices(const MultiGraph& g, std::span<const VertexId> zs);

MultiGraph delete_edges(const MultiGraph& g, std::span<const EdgeId> es);

/// Union of two subgraphs of the same host.
SubgraphRef unite(const SubgraphRef& a, const SubgraphRef& b);

/// Merges the ends of `e` into the smaller endpoint id. Other edges keep their
/// ids, so new loops and parallel edges survive; contracting a loop deletes it.
MultiGraph contract_edge(const MultiGraph& g, EdgeId e);

/// Simple graph helpers used by fixtures and tests.
MultiGraph complete_graph(int n);
MultiGraph cycle_graph(int n);
MultiGraph path_graph(int n);
MultiGraph grid_graph(int rows, int cols);
MultiGraph complete_bipartite(int a, int b);
MultiGraph petersen_graph();
MultiGraph star_graph(int leaves);
/// Every edge replaced by a path of length two; new vertex ids follow the old ones.
MultiGraph subdivide_all(const MultiGraph& g);
/// Relabels vertex i as perm[i] (perm indexed by dense vertex index).
MultiGraph relabel(const MultiGraph& g, std::span<const VertexId> perm);
/// Disjoint union; the second graph's ids are shifted past the first's.
MultiGraph disjoint_union(const MultiGraph& a, const MultiGraph& b);

}  // namespace tk
