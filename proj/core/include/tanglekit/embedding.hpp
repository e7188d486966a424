#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "tanglekit/graph.hpp"
#include "tanglekit/guards.hpp"
#include "tanglekit/report.hpp"

namespace tk {

/// One end of an edge: end 0 sits at edge.u, end 1 at edge.v.
struct EdgeEnd {
  EdgeId edge = 0;
  int end = 0;
  friend bool operator==(const EdgeEnd&, const EdgeEnd&) = default;
  friend auto operator<=>(const EdgeEnd&, const EdgeEnd&) = default;
};

/// Rotation system with edge signatures. Corner k at a vertex is the angle
/// between rotation[k] and rotation[k+1] (cyclically).
struct RotationEmbedding {
  MultiGraph host;
  std::vector<std::vector<EdgeEnd>> rotation;  ///< by dense vertex index
  std::vector<int> signature;                  ///< by dense edge index, +1 or -1
  /// Euler genus of the surface the drawing lives in, when stated. Unset
  /// means the surface the rotation system itself determines.
  std::optional<int> surface_genus;
};

/// Rotation from the order edges appear in the host's incidence lists, all
/// signatures +1.
RotationEmbedding default_embedding(const MultiGraph& g);

/// Throws InputError unless every edge end appears exactly once at its
/// vertex and every signature is +1 or -1.
void validate_embedding(const RotationEmbedding& e);

/// A closed boundary walk. vertices[i] is left along edges[i] and the walk
/// turns through corner corners[i] there. A vertex without edges has one
/// face with that vertex alone.
struct Face {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
  std::vector<int> corners;
  std::vector<int> twist;  ///< local orientation (+1/-1) at each step
  int length() const { return static_cast<int>(edges.size()); }
};

/// Every corner lies in exactly one returned walk.
std::vector<Face> trace_faces(const RotationEmbedding& e);

/// True when some choice of local flips makes every signature +1.
bool is_orientable(const RotationEmbedding& e);

/// 2 - |V| + |E| - |F| for a connected host; throws PreconditionError
/// otherwise.
int euler_genus(const RotationEmbedding& e);

/// Connected host, and the traced genus matches the stated surface.
bool is_2cell(const RotationEmbedding& e);

/// Calls `visit` with every rotation system of h whose summed component
/// genus is at most max_euler_genus, stopping when it returns false.
/// Signatures are fixed to +1 on a spanning forest, so each switching class
/// appears once; at genus 0 only orientable systems are generated.
void for_each_embedding(const MultiGraph& h, int max_euler_genus, const Guards& guards,
                        const std::function<bool(const RotationEmbedding&)>& visit);

std::vector<RotationEmbedding> enumerate_embeddings(const MultiGraph& h, int max_euler_genus,
                                                    const Guards& guards = {});

inline constexpr int kInfinity = std::numeric_limits<int>::max();

/// Minimum number of regions touching every vertex of degree >= 4, over
/// all embeddings of h in surfaces of exactly this Euler genus (both
/// orientabilities where they exist), or kInfinity. Embeddings need not be
/// 2-cell: faces may be merged through handles and components nested.
/// `at_most` widens the minimum to every genus up to the given one.
int mf(const MultiGraph& h, int euler_genus, const Guards& guards = {}, bool at_most = false);

/// 2-cell embedding in which every degree >= 4 vertex meets exactly one
/// face of `faces` (indices into trace_faces), and |faces| = mf.
/// Clauses: "2-cell", "face", "incidence", "size".
CheckReport is_nice_embedding(const MultiGraph& h, const RotationEmbedding& e, std::span<const int> faces,
                              const Guards& guards = {});

}  // namespace tk
