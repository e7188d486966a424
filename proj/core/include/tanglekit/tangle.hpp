#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "tanglekit/graph.hpp"
#include "tanglekit/guards.hpp"
#include "tanglekit/minor.hpp"

namespace tk {

struct Separation {
  SubgraphRef a;
  SubgraphRef b;

  /// |V(A) ∩ V(B)|
  int order() const;
  std::vector<VertexId> boundary() const;
  Separation reversed() const { return {b, a}; }

  friend bool operator==(const Separation&, const Separation&) = default;
  /// By V(A), then V(B), then E(A), then E(B).
  friend std::strong_ordering operator<=>(const Separation& x, const Separation& y);
};

struct Tangle {
  int order = 0;
  std::vector<Separation> members;  ///< sorted
  friend bool operator==(const Tangle&, const Tangle&) = default;
};

/// Throws InputError unless (A,B) is a separation of g.
void validate_separation(const MultiGraph& g, const Separation& s);

/// Every separation of order < max_order, both orientations, sorted. Edges
/// with both ends in V(A) ∩ V(B) are assigned to each side in turn, so
/// separations differing only there are distinct.
std::vector<Separation> enumerate_separations(const MultiGraph& g, int max_order,
                                              const Guards& guards = {});

struct TangleReport {
  bool ok = true;
  std::string axiom;  ///< "T1", "T2" or "T3" when !ok
  std::string message;
  std::vector<Separation> witness;
  explicit operator bool() const { return ok; }
};

/// Checks (T3), then (T1), then (T2). Members of order >= θ or not
/// separations of g raise InputError.
TangleReport is_tangle(const MultiGraph& g, const Tangle& t, const Guards& guards = {});

/// All tangles of the given order, each with sorted members; the list is
/// sorted by member sequence.
std::vector<Tangle> enumerate_tangles(const MultiGraph& g, int order, const Guards& guards = {});

/// Members of order < new_order.
Tangle truncate(const Tangle& t, int new_order);

/// T - Z in G - Z, of order θ - |Z|.
Tangle tangle_minus(const MultiGraph& g, const Tangle& t, std::span<const VertexId> z);

/// Tangle in g induced through an H-minor model by a tangle in h.
Tangle induced_tangle(const MultiGraph& g, const MultiGraph& h, const MinorModel& model,
                      const Tangle& t_h, const Guards& guards = {});

/// True iff every member of the lower-order tangle belongs to the other.
bool is_conformal(const MultiGraph& g, const Tangle& small, const Tangle& big);

/// No member of order < |X| has X ⊆ V(A).
bool is_free(const MultiGraph& g, const Tangle& t, std::span<const VertexId> x);

/// No member of order < k has v ∈ V(A) - V(B). Requires k <= θ.
bool is_k_free_vertex(const MultiGraph& g, const Tangle& t, VertexId v, int k);

/// No member of order < |V(H)| has some branch set inside V(A).
bool controls_minor(const MultiGraph& g, const MultiGraph& h, const Tangle& t,
                    const MinorModel& model);

}  // namespace tk
