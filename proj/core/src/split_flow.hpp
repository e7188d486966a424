#pragma once

// Unit vertex-capacity flow on the vertex-split network of a MultiGraph.
// Internal to the core library.

#include <climits>
#include <span>
#include <vector>

#include "tanglekit/graph.hpp"
#include "tanglekit/paths.hpp"

namespace tk::detail {

class SplitFlow {
 public:
  /// `blocked[vi] != 0` deletes the vertex at dense index vi.
  SplitFlow(const MultiGraph& g, std::span<const char> blocked = {});

  /// Lets any number of paths pass through the vertex (used for shared
  /// path ends).
  void set_unbounded(int vi) { unbounded_[vi] = 1; }

  /// Max number of vertex-disjoint paths from src to dst (dense indices),
  /// stopping once `limit` is reached.
  int run(std::span<const int> src, std::span<const int> dst, int limit = INT_MAX);

  /// Paths of the last run, sorted by first vertex, then by vertex sequence.
  std::vector<Path> paths() const;

  /// Residual reachability from the source after the last run; only
  /// meaningful when the run was not cut short by `limit`.
  bool in_reachable(int vi) const { return reach_[in_node(vi)] != 0; }
  bool out_reachable(int vi) const { return reach_[out_node(vi)] != 0; }

 private:
  struct Arc {
    int to;
    int cap;
    int rev;
    EdgeId edge;  // host edge for inter-vertex arcs, -1 otherwise
    int orig;     // original capacity; 0 marks a reverse arc
  };

  int in_node(int vi) const { return 2 * vi; }
  int out_node(int vi) const { return 2 * vi + 1; }
  void add_arc(int a, int b, int cap, EdgeId edge);
  void build(std::span<const int> src, std::span<const int> dst);
  bool augment();

  const MultiGraph& g_;
  std::vector<char> blocked_;
  std::vector<char> unbounded_;
  std::vector<std::vector<Arc>> adj_;
  std::vector<char> reach_;
  int source_ = 0;
  int sink_ = 0;
};

}  // namespace tk::detail
