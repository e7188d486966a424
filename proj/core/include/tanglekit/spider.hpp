#pragma once

#include <optional>
#include <span>
#include <vector>

#include "tanglekit/graph.hpp"
#include "tanglekit/guards.hpp"
#include "tanglekit/report.hpp"
#include "tanglekit/tangle.hpp"

namespace tk {

/// A tree in which every vertex but the head has degree at most 2. The
/// leaves are the degree-1 vertices, so for d = 1 the head is one of them.
struct Spider {
  VertexId head = 0;
  SubgraphRef tree;
  std::vector<VertexId> leaves;  ///< sorted
  friend bool operator==(const Spider&, const Spider&) = default;
};

/// Clauses: "ref", "tree", "head", "degree", "leaves", "from", "to".
CheckReport is_spider(const MultiGraph& g, const Spider& s, int d, std::span<const VertexId> from,
                      std::span<const VertexId> to);

/// Pairwise vertex-disjoint d-spiders, each passing is_spider.
CheckReport verify_spider_packing(const MultiGraph& g, std::span<const Spider> spiders, int d,
                                  std::span<const VertexId> from, std::span<const VertexId> to);

/// Some d-spider from x to y avoiding `avoid`, with the smallest possible head.
std::optional<Spider> find_spider(const MultiGraph& g, std::span<const VertexId> x,
                                  std::span<const VertexId> y, int d,
                                  std::span<const VertexId> avoid = {});

/// h pairwise disjoint d-spiders from x to y, or none when no h heads can
/// carry them. Head sets are tried in lexicographic order. x and y must be
/// disjoint and d >= 1.
std::optional<std::vector<Spider>> find_spider_packing(const MultiGraph& g, std::span<const VertexId> x,
                                                       std::span<const VertexId> y, int d, int h,
                                                       const Guards& guards = {});

/// True iff every d-spider from x to y meets c.
bool is_spider_cover(const MultiGraph& g, std::span<const VertexId> x, std::span<const VertexId> y,
                     int d, std::span<const VertexId> c);

/// Smallest set meeting every d-spider from x to y; the lexicographically
/// first among those of minimum size.
std::vector<VertexId> min_spider_cover(const MultiGraph& g, std::span<const VertexId> x,
                                       std::span<const VertexId> y, int d, const Guards& guards = {});

/// 3/2 (hd)^(d+1) + d/2 + 1
double spider_cover_bound(int h, int d);

struct DichotomyResult {
  enum class Variant { packing, cover };
  Variant variant = Variant::cover;
  std::vector<Spider> packing;
  std::vector<VertexId> cover;
  double bound = 0;  ///< cover-size bound for this h and d
};

/// A packing of h spiders if one exists, else a minimum cover.
DichotomyResult erdos_posa_dichotomy(const MultiGraph& g, std::span<const VertexId> x,
                                     std::span<const VertexId> y, int d, int h,
                                     const Guards& guards = {});

/// h pairwise disjoint sets, each a vertex of s with d-1 of its neighbours,
/// whose union is free in t. Every vertex of s needs degree >= d.
std::optional<std::vector<std::vector<VertexId>>> free_head_packing(const MultiGraph& g, const Tangle& t,
                                                                    std::span<const VertexId> s, int d,
                                                                    int h);

/// Certificate for the other outcome: every v in s - c is cut off by some
/// member (A,B) of t - c of order < d with v in V(A) - V(B). Requires
/// |c| < θ. Clauses: "size", "head".
CheckReport verify_head_obstruction(const MultiGraph& g, const Tangle& t, std::span<const VertexId> s,
                                    int d, std::span<const VertexId> c);

}  // namespace tk
