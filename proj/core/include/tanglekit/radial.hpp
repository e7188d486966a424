#pragma once

#include <map>
#include <string>
#include <vector>

#include "tanglekit/embedding.hpp"
#include "tanglekit/tangle.hpp"

namespace tk {

/// Vertex-face incidence graph of a 2-cell drawing, drawn in the same
/// surface. Original vertices keep their ids; face i becomes vertex
/// face_base + i. Edge j joins the two ends of corners[j].
struct RadialGraph {
  struct Corner {
    VertexId vertex = 0;
    int corner = 0;    ///< corner index in the vertex's rotation
    int face = 0;      ///< index into faces
    int position = 0;  ///< step of that face's walk
  };
  MultiGraph host;   ///< the drawn graph
  MultiGraph graph;  ///< the radial graph
  RotationEmbedding embedding;
  std::vector<Face> faces;
  VertexId face_base = 0;
  std::vector<Corner> corners;
};

/// Throws PreconditionError unless the drawing is 2-cell.
RadialGraph radial_drawing(const RotationEmbedding& e);

/// An atom of the drawing; a region is named by its face index.
struct Atom {
  enum class Kind { vertex, edge, region };
  Kind kind = Kind::vertex;
  int id = 0;
  friend bool operator==(const Atom&, const Atom&) = default;
  friend auto operator<=>(const Atom&, const Atom&) = default;
};

std::string to_string(const Atom& a);

struct RespectReport {
  bool ok = true;
  std::string message;
  std::vector<EdgeId> cycle;  ///< radial cycle with no admissible side, when !ok
  /// For each short radial cycle (sorted radial edge ids), the closed disk
  /// chosen as its inside, as the atoms of the drawing it contains.
  std::map<std::vector<EdgeId>, std::vector<Atom>> inside;
  explicit operator bool() const { return ok; }
};

/// Every radial cycle through fewer than θ original vertices bounds a disk
/// whose separation (Γ ∩ Δ, Γ ∩ closure of the rest) belongs to t.
RespectReport is_respectful(const RotationEmbedding& e, const Tangle& t, const Guards& guards = {});

/// m_T on vertices, edges and regions. Pairs sharing no closed radial walk
/// of length < 2θ get θ.
struct AtomMetric {
  int theta = 0;
  std::vector<Atom> atoms;               ///< vertices, then edges, then regions
  std::vector<std::vector<int>> table;   ///< indexed like atoms
  std::vector<Atom> uncovered;           ///< atoms inside no short walk at all

  int index(const Atom& a) const;
  int at(const Atom& a, const Atom& b) const { return table[index(a)][index(b)]; }
};

/// Throws PreconditionError when the drawing is not respectful.
AtomMetric atom_metric(const RotationEmbedding& e, const Tangle& t, const Guards& guards = {});

/// A cycle of the drawn graph and a face on the side meant as the disk.
struct ZoneWitness {
  std::vector<EdgeId> cycle;
  int inside_face = 0;
};

/// x lies in the open disk, every atom of its closure is within λ of x, and
/// λ >= 2 when x is an edge. Clauses: "edge-lambda", "disk", "contains",
/// "distance". A witness that is not a cycle raises InputError.
CheckReport is_lambda_zone(const RotationEmbedding& e, const AtomMetric& m, const Atom& x,
                           const ZoneWitness& w, int lambda);

}  // namespace tk
