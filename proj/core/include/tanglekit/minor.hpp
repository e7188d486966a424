#pragma once

#include <map>
#include <optional>

#include "tanglekit/graph.hpp"
#include "tanglekit/guards.hpp"
#include "tanglekit/paths.hpp"
#include "tanglekit/report.hpp"

namespace tk {

/// H-minor model: a connected branch set per pattern vertex and a host edge
/// per pattern edge.
struct MinorModel {
  std::map<VertexId, SubgraphRef> branch;
  std::map<EdgeId, EdgeId> edge_image;
  friend bool operator==(const MinorModel&, const MinorModel&) = default;
};

/// H-subdivision model: branch vertices plus one host path per pattern edge
/// (a closed walk starting and ending at the branch vertex for loops).
struct SubdivisionModel {
  std::map<VertexId, VertexId> vertex_image;
  std::map<EdgeId, Path> edge_path;
  friend bool operator==(const SubdivisionModel&, const SubdivisionModel&) = default;
};

CheckReport verify_minor(const MultiGraph& g, const MultiGraph& h, const MinorModel& m);
CheckReport verify_subdivision(const MultiGraph& g, const MultiGraph& h, const SubdivisionModel& m);

/// Exhaustive searches; the first model in a fixed deterministic order, or
/// nullopt once every candidate has been ruled out.
std::optional<MinorModel> find_minor(const MultiGraph& g, const MultiGraph& h,
                                     const Guards& guards = {});
std::optional<SubdivisionModel> find_subdivision(const MultiGraph& g, const MultiGraph& h,
                                                 const Guards& guards = {});

/// Identity models of a graph inside itself.
MinorModel identity_minor(const MultiGraph& g);
SubdivisionModel identity_subdivision(const MultiGraph& g);

}  // namespace tk
