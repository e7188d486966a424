#pragma once

// Fixed-width bitsets over the atoms (vertices, then edges) of a small host.
// Bits [0, 64) hold vertices by dense index, bits [64, 256) hold edges.

#include <array>
#include <bit>
#include <cstdint>
#include <functional>

#include "tanglekit/graph.hpp"

namespace tk::detail {

inline constexpr int kMaskVertices = 64;
inline constexpr int kMaskEdges = 192;

struct AtomMask {
  std::array<std::uint64_t, 4> w{};

  void set(int bit) { w[bit >> 6] |= std::uint64_t{1} << (bit & 63); }
  bool test(int bit) const { return (w[bit >> 6] >> (bit & 63)) & 1; }
  void set_vertex(int vi) { set(vi); }
  void set_edge(int ei) { set(kMaskVertices + ei); }
  bool has_vertex(int vi) const { return test(vi); }
  bool has_edge(int ei) const { return test(kMaskVertices + ei); }
  std::uint64_t vertex_bits() const { return w[0]; }
  int vertex_count() const { return std::popcount(w[0]); }

  AtomMask operator|(const AtomMask& o) const {
    return {{w[0] | o.w[0], w[1] | o.w[1], w[2] | o.w[2], w[3] | o.w[3]}};
  }
  AtomMask operator&(const AtomMask& o) const {
    return {{w[0] & o.w[0], w[1] & o.w[1], w[2] & o.w[2], w[3] & o.w[3]}};
  }
  AtomMask& operator|=(const AtomMask& o) {
    for (int i = 0; i < 4; ++i) w[i] |= o.w[i];
    return *this;
  }
  bool subset_of(const AtomMask& o) const {
    return (w[0] & ~o.w[0]) == 0 && (w[1] & ~o.w[1]) == 0 && (w[2] & ~o.w[2]) == 0 &&
           (w[3] & ~o.w[3]) == 0;
  }
  bool intersects(const AtomMask& o) const {
    return (w[0] & o.w[0]) | (w[1] & o.w[1]) | (w[2] & o.w[2]) | (w[3] & o.w[3]);
  }
  friend bool operator==(const AtomMask&, const AtomMask&) = default;
  friend auto operator<=>(const AtomMask&, const AtomMask&) = default;
};

struct AtomMaskHash {
  std::size_t operator()(const AtomMask& m) const {
    std::size_t h = 0;
    for (auto x : m.w) h = h * 0x9E3779B97F4A7C15ull + std::hash<std::uint64_t>{}(x);
    return h;
  }
};

/// Converts between SubgraphRefs of one host and masks. Throws GuardError
/// when the host has more than 64 vertices or 192 edges.
class AtomIndex {
 public:
  explicit AtomIndex(const MultiGraph& g);

  AtomMask encode(const SubgraphRef& ref) const;
  SubgraphRef decode(const AtomMask& m) const;
  const AtomMask& full() const { return full_; }
  const MultiGraph& graph() const { return g_; }

 private:
  const MultiGraph& g_;
  AtomMask full_;
};

}  // namespace tk::detail
