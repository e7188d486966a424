#pragma once

#include <map>
#include <string>
#include <vector>

#include "tanglekit/embedding.hpp"
#include "tanglekit/graph.hpp"
#include "tanglekit/report.hpp"
#include "tanglekit/tangle.hpp"
#include "tanglekit/vortex.hpp"

namespace tk {

/// A closed disk of the frame: a cycle of frame edges and one face lying on
/// the disk's side of it.
struct DiskAssignment {
  std::vector<EdgeId> boundary;
  int side = 0;  ///< index into trace_faces(frame)
  friend bool operator==(const DiskAssignment&, const DiskAssignment&) = default;
};

/// A segregation drawn in the surface of a 2-cell frame embedding. α maps
/// every boundary vertex of the segregation to a frame vertex, and society
/// i is drawn as disks[i].
struct ArrangementCertificate {
  Segregation segregation;
  RotationEmbedding frame;
  std::map<VertexId, VertexId> placement;
  std::vector<DiskAssignment> disks;
};

/// Union of the societies' boundaries, sorted.
std::vector<VertexId> boundary_vertices(const Segregation& seg);

/// The four arrangement conditions. Clauses: "segregation", "placement",
/// "injective", "disk", "boundary", "order", "overlap". A frame that is not
/// a connected 2-cell rotation system, a disk count that differs from the
/// society count, a face index out of range or a boundary that is not a
/// cycle raise InputError.
CheckReport is_arrangement(const MultiGraph& g, const ArrangementCertificate& cert);

/// is_arrangement, then "proper": disks of societies with more than three
/// boundary vertices are disjoint.
CheckReport is_proper_arrangement(const MultiGraph& g, const ArrangementCertificate& cert);

/// Triangle boundaries for 3-boundary societies and a line for 2-boundary
/// ones, drawn in the frame's surface. Vertices keep the segregation's ids.
/// Throws InputError unless the arrangement is proper.
RotationEmbedding build_skeleton(const MultiGraph& g, const ArrangementCertificate& cert);

/// Like the skeleton, except that every society with three or more boundary
/// vertices contributes its disk boundary, and a 2-boundary society whose
/// ends are joined by two edge-disjoint paths contributes two parallel
/// edges.
RotationEmbedding build_trunk(const MultiGraph& g, const ArrangementCertificate& cert);

/// At most three distinct neighbours at every vertex.
bool is_weakly_subcubic(const MultiGraph& g);

struct OutcomeParams {
  int d = 4;
  int xi = 0;     ///< bound on |Z|
  int kappa = 0;  ///< bound on the number of vortices
  int rho = 0;    ///< vortex depth bound
  int genus = 0;  ///< Euler genus bound on the frame's surface
};

struct OutcomeCertificate {
  enum class Variant { captured, arranged };
  enum class Drawing { impossible, few_regions };
  Variant variant = Variant::captured;
  std::vector<VertexId> z;
  /// The arranged variant: a segregation of G - Z and its drawing.
  ArrangementCertificate arrangement;
  std::vector<int> vortices;  ///< indices of the vortex societies
  Drawing drawing = Drawing::impossible;
  std::vector<int> chosen;    ///< vortices whose interiors hold the free vertices
};

struct ClauseResult {
  std::string name;
  bool ok = true;
  std::string witness;
};

struct Verdict {
  bool accepted = true;
  std::vector<ClauseResult> clauses;
  std::vector<std::string> notes;
  std::vector<std::string> failed() const;
};

/// Checks every clause of the chosen outcome and reports each one.
/// Captured: "tangle", "z-size", "capture". Arranged: "tangle", "z-size",
/// "segregation", "central", "small-boundary", "vortex-count",
/// "vortex-depth", "arrangement", "genus", then "not-drawable" or "mf",
/// "chosen-count", "coverage". With trust_tangle the tangle is not checked
/// and a note says so.
Verdict check_outcome(const MultiGraph& g, const Tangle& t, const MultiGraph& h, const OutcomeCertificate& cert,
                      const OutcomeParams& params, const Guards& guards = {}, bool trust_tangle = false);

}  // namespace tk
