#pragma once

#include <span>
#include <string>
#include <vector>

#include "tanglekit/embedding.hpp"
#include "tanglekit/graph.hpp"
#include "tanglekit/report.hpp"
#include "tanglekit/tangle.hpp"

namespace tk {

/// A subgraph of the host with a cyclically ordered boundary Ω̄ ⊆ V(S).
struct Society {
  SubgraphRef graph;
  std::vector<VertexId> boundary;
  friend bool operator==(const Society&, const Society&) = default;
};

using Segregation = std::vector<Society>;

/// Throws InputError unless the graph is a subgraph of g and the boundary
/// lists distinct vertices of it.
void validate_society(const MultiGraph& g, const Society& s);

/// Least ρ such that no boundary split into two nonempty arcs is linked by
/// ρ+1 disjoint paths of S. Zero when |Ω̄| <= 1.
int vortex_depth(const MultiGraph& g, const Society& s);

bool is_rho_vortex(const MultiGraph& g, const Society& s, int rho);

/// Path decomposition of S with bag i holding boundary vertex i. With an
/// empty boundary there is a single bag.
struct LinearDecomposition {
  std::vector<std::vector<VertexId>> bags;  ///< each sorted
  int adhesion = 0;                         ///< largest pairwise bag intersection
  friend bool operator==(const LinearDecomposition&, const LinearDecomposition&) = default;
};

/// Bags cut between boundary prefixes and suffixes by leftmost minimum
/// vertex cuts. Throws PreconditionError unless the society is a ρ-vortex.
LinearDecomposition vortex_linear_decomposition(const MultiGraph& g, const Society& s, int rho);

/// Clauses: "count", "boundary", "vertex", "edge", "path", "adhesion".
CheckReport check_linear_decomposition(const MultiGraph& g, const Society& s,
                                       const LinearDecomposition& d);

/// Clauses: "society", "cover", "shared-edge", "overlap".
CheckReport is_segregation(const MultiGraph& g, const Segregation& seg);

struct CentralityReport {
  bool ok = true;
  int society = -1;      ///< index of the offending society
  Separation witness;    ///< member of order <= θ/2 with B inside it
  std::string message;
  explicit operator bool() const { return ok; }
};

/// No member (A,B) of order at most θ/2 has B inside a single society.
CentralityReport is_T_central(const MultiGraph& g, const Segregation& seg, const Tangle& t);

/// S with an outer boundary Ω and an inner boundary Ω₀.
struct Neighborhood {
  SubgraphRef graph;
  std::vector<VertexId> outer;
  std::vector<VertexId> inner;
  friend bool operator==(const Neighborhood&, const Neighborhood&) = default;
};

/// A plane drawing of S with the faces playing the outside of Δ and the
/// inside of Δ₀, as indices into trace_faces(embedding).
struct RuralWitness {
  RotationEmbedding embedding;
  int outer_face = 0;
  int inner_face = 0;
};

/// S is drawn connected in the sphere, Ω appears along the outer face and
/// Ω₀ along the inner face, both in the same rotational sense. When the two
/// faces coincide the two boundaries must not interleave. Clauses: "planar",
/// "outer", "inner". A witness for a different graph raises InputError.
CheckReport is_rural_presentation(const MultiGraph& g, const Neighborhood& n, const RuralWitness& w);

/// Cycles given by edge ids, innermost first. Pairwise disjoint, each with
/// Δ₀ on its inside and the outer face on its outside, and each inside
/// contained in the next. Clauses: those of is_rural_presentation, then
/// "disjoint", "inner", "order". A list that is not a cycle raises
/// InputError.
CheckReport is_nest(const MultiGraph& g, const Neighborhood& n, const RuralWitness& w,
                    const std::vector<std::vector<EdgeId>>& cycles);

struct PerpendicularReport {
  bool ok = true;
  std::string clause;
  std::string message;
  /// (component index, cycle index) pairs meeting in the empty graph.
  std::vector<std::pair<int, int>> empty_meetings;
  explicit operator bool() const { return ok; }
};

/// Every component of f is a path from Ω̄ to Ω̄₀ meeting each nest cycle in
/// a path. Empty meetings are listed, and rejected unless allow_empty.
/// Clauses: "ref", "path", "ends", "meet", "empty".
PerpendicularReport is_perpendicular(const MultiGraph& g, const Neighborhood& n, const SubgraphRef& f,
                                     const std::vector<std::vector<EdgeId>>& nest,
                                     bool allow_empty = true);

/// (S ∪ S₀, Ω). Throws InputError unless Ω₀ equals the inner society's
/// boundary up to rotation.
Society compose(const MultiGraph& g, const Society& inner, const Neighborhood& n);

}  // namespace tk
