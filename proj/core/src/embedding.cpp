#include "tanglekit/embedding.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>

#include "id_sets.hpp"

namespace tk {

namespace {

int end_vertex(const Edge& e, int end) { return end == 0 ? e.u : e.v; }

// Darts at each vertex in incidence order; a loop contributes end 0 then end 1.
std::vector<std::vector<EdgeEnd>> incidence_darts(const MultiGraph& g) {
  std::vector<std::vector<EdgeEnd>> out(g.vertex_count());
  for (int vi = 0; vi < g.vertex_count(); ++vi) {
    std::set<int> seen_loop;
    for (int ei : g.incident(vi)) {
      const Edge& e = g.edges()[ei];
      int end = e.is_loop() ? (seen_loop.insert(ei).second ? 0 : 1) : (e.u == g.vertices()[vi] ? 0 : 1);
      out[vi].push_back({e.id, end});
    }
  }
  return out;
}

// Position of each dart in its vertex's rotation, by dense edge index and end.
std::vector<std::array<int, 2>> dart_positions(const RotationEmbedding& e) {
  std::vector<std::array<int, 2>> pos(e.host.edge_count(), {-1, -1});
  for (const auto& rot : e.rotation)
    for (int k = 0; k < static_cast<int>(rot.size()); ++k) pos[e.host.edge_index(rot[k].edge)][rot[k].end] = k;
  return pos;
}

struct Tracer {
  const RotationEmbedding& e;
  std::vector<std::array<int, 2>> pos;

  explicit Tracer(const RotationEmbedding& emb) : e(emb), pos(dart_positions(emb)) {}

  std::vector<Face> run() const {
    const MultiGraph& g = e.host;
    std::vector<Face> faces;
    std::vector<std::vector<char>> used(g.vertex_count());
    for (int vi = 0; vi < g.vertex_count(); ++vi) used[vi].assign(e.rotation[vi].size(), 0);
    for (int vi = 0; vi < g.vertex_count(); ++vi) {
      int deg = static_cast<int>(e.rotation[vi].size());
      if (deg == 0) {
        faces.push_back({{g.vertices()[vi]}, {}, {}, {}});
        continue;
      }
      for (int k = 0; k < deg; ++k) {
        if (used[vi][k]) continue;
        Face f;
        int v = vi, p = k, s = 1;
        do {
          const auto& rot = e.rotation[v];
          int d = static_cast<int>(rot.size());
          int corner = s > 0 ? p : (p + d - 1) % d;
          int q = s > 0 ? (p + 1) % d : (p + d - 1) % d;
          EdgeEnd out = rot[q];
          used[v][corner] = 1;
          f.vertices.push_back(g.vertices()[v]);
          f.edges.push_back(out.edge);
          f.corners.push_back(corner);
          f.twist.push_back(s);
          int ei = g.edge_index(out.edge);
          int back = 1 - out.end;
          v = g.vertex_index(end_vertex(g.edges()[ei], back));
          p = pos[ei][back];
          s *= e.signature[ei];
        } while (!(v == vi && p == k && s == 1));
        faces.push_back(std::move(f));
      }
    }
    return faces;
  }
};

// Component index per dense vertex index.
std::vector<int> component_of(const MultiGraph& g) {
  std::vector<int> comp(g.vertex_count(), -1);
  auto comps = g.components();
  for (int c = 0; c < static_cast<int>(comps.size()); ++c)
    for (VertexId v : comps[c]) comp[g.vertex_index(v)] = c;
  return comp;
}

// Sum over components of 2 - V + E - F.
int genus_sum(const MultiGraph& g, const std::vector<Face>& faces) {
  auto comp = component_of(g);
  int ncomp = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  return 2 * ncomp - g.vertex_count() + g.edge_count() - static_cast<int>(faces.size());
}

// Spanning-forest edge flags, by dense edge index.
std::vector<char> forest_edges(const MultiGraph& g) {
  std::vector<int> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<char> tree(g.edge_count(), 0);
  for (int ei = 0; ei < g.edge_count(); ++ei) {
    const Edge& e = g.edges()[ei];
    int a = find(g.vertex_index(e.u)), b = find(g.vertex_index(e.v));
    if (a != b) {
      parent[a] = b;
      tree[ei] = 1;
    }
  }
  return tree;
}

double factorial(int n) {
  double f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

RotationEmbedding default_embedding(const MultiGraph& g) {
  return {g, incidence_darts(g), std::vector<int>(g.edge_count(), 1), std::nullopt};
}

void validate_embedding(const RotationEmbedding& e) {
  const MultiGraph& g = e.host;
  if (static_cast<int>(e.rotation.size()) != g.vertex_count())
    throw InputError("rotation lists " + std::to_string(e.rotation.size()) + " vertices, graph has " +
                     std::to_string(g.vertex_count()));
  if (static_cast<int>(e.signature.size()) != g.edge_count())
    throw InputError("signature lists " + std::to_string(e.signature.size()) + " edges, graph has " +
                     std::to_string(g.edge_count()));
  for (int s : e.signature)
    if (s != 1 && s != -1) throw InputError("signature entries must be +1 or -1");
  std::vector<std::array<int, 2>> seen(g.edge_count(), {0, 0});
  for (int vi = 0; vi < g.vertex_count(); ++vi) {
    for (const EdgeEnd& d : e.rotation[vi]) {
      if (!g.has_edge(d.edge) || (d.end != 0 && d.end != 1))
        throw InputError("bad edge end in rotation of vertex " + std::to_string(g.vertices()[vi]));
      int ei = g.edge_index(d.edge);
      if (end_vertex(g.edges()[ei], d.end) != g.vertices()[vi])
        throw InputError("edge " + std::to_string(d.edge) + " end " + std::to_string(d.end) +
                         " is not at vertex " + std::to_string(g.vertices()[vi]));
      if (seen[ei][d.end]++) throw InputError("edge end listed twice: " + std::to_string(d.edge));
    }
  }
  for (int ei = 0; ei < g.edge_count(); ++ei)
    if (!seen[ei][0] || !seen[ei][1])
      throw InputError("edge " + std::to_string(g.edges()[ei].id) + " missing from the rotation");
  if (e.surface_genus && *e.surface_genus < 0) throw InputError("surface genus must be non-negative");
}

std::vector<Face> trace_faces(const RotationEmbedding& e) {
  validate_embedding(e);
  return Tracer(e).run();
}

bool is_orientable(const RotationEmbedding& e) {
  validate_embedding(e);
  const MultiGraph& g = e.host;
  std::vector<int> flip(g.vertex_count(), 0);
  for (int root = 0; root < g.vertex_count(); ++root) {
    if (flip[root]) continue;
    flip[root] = 1;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int ei : g.incident(x)) {
        const Edge& ed = g.edges()[ei];
        int y = g.vertex_index(ed.other(g.vertices()[x]));
        int want = flip[x] * e.signature[ei];
        if (!flip[y]) {
          flip[y] = want;
          stack.push_back(y);
        } else if (flip[y] != want) {
          return false;
        }
      }
    }
  }
  return true;
}

int euler_genus(const RotationEmbedding& e) {
  if (e.host.vertex_count() == 0 || !e.host.is_connected())
    throw PreconditionError("euler_genus needs a connected non-empty graph");
  return genus_sum(e.host, trace_faces(e));
}

bool is_2cell(const RotationEmbedding& e) {
  if (e.host.vertex_count() == 0 || !e.host.is_connected()) return false;
  int g = euler_genus(e);
  return !e.surface_genus || *e.surface_genus == g;
}

namespace {

// Face count of a rotation system, and the target bits each face meets,
// without materialising the walks.
struct FaceScan {
  const MultiGraph& g;
  std::vector<std::uint32_t> bit;  ///< by dense vertex index
  std::vector<std::array<int, 2>> pos;
  std::vector<std::vector<char>> used;
  std::vector<std::uint32_t> masks;

  FaceScan(const MultiGraph& host, std::vector<std::uint32_t> bits)
      : g(host), bit(std::move(bits)), pos(host.edge_count()), used(host.vertex_count()) {
    if (bit.empty()) bit.assign(host.vertex_count(), 0);
  }

  int run(const RotationEmbedding& e) {
    for (int vi = 0; vi < g.vertex_count(); ++vi) {
      const auto& rot = e.rotation[vi];
      used[vi].assign(rot.size(), 0);
      for (int k = 0; k < static_cast<int>(rot.size()); ++k) pos[g.edge_index(rot[k].edge)][rot[k].end] = k;
    }
    masks.clear();
    for (int vi = 0; vi < g.vertex_count(); ++vi) {
      int deg = static_cast<int>(e.rotation[vi].size());
      if (deg == 0) masks.push_back(bit[vi]);
      for (int k = 0; k < deg; ++k) {
        if (used[vi][k]) continue;
        std::uint32_t m = 0;
        int v = vi, p = k, s = 1;
        do {
          const auto& rot = e.rotation[v];
          int d = static_cast<int>(rot.size());
          int q = s > 0 ? (p + 1) % d : (p + d - 1) % d;
          used[v][s > 0 ? p : q] = 1;
          m |= bit[v];
          EdgeEnd out = rot[q];
          int ei = g.edge_index(out.edge);
          int back = 1 - out.end;
          v = g.vertex_index(end_vertex(g.edges()[ei], back));
          p = pos[ei][back];
          s *= e.signature[ei];
        } while (!(v == vi && p == k && s == 1));
        masks.push_back(m);
      }
    }
    return static_cast<int>(masks.size());
  }
};

enum class Signs { plus, twisted, all };

using Visit = std::function<bool(const RotationEmbedding&, const std::vector<std::uint32_t>& face_masks, int genus)>;

// With the forest fixed to +1, the all-plus assignment is exactly the
// orientable case; `twisted` skips it.
void walk_embeddings(const MultiGraph& h, int max_euler_genus, Signs signs, const Guards& guards,
                     std::vector<std::uint32_t> bits, const Visit& visit) {
  if (max_euler_genus < 0) throw PreconditionError("max_euler_genus must be non-negative");
  RotationEmbedding e = default_embedding(h);
  for (auto& rot : e.rotation)
    if (rot.size() > 1) std::sort(rot.begin() + 1, rot.end());

  std::vector<int> free_edges;
  if (signs != Signs::plus) {
    auto tree = forest_edges(h);
    for (int ei = 0; ei < h.edge_count(); ++ei)
      if (!tree[ei]) free_edges.push_back(ei);
  }
  double total = std::pow(2.0, static_cast<double>(free_edges.size()));
  for (const auto& rot : e.rotation) total *= factorial(std::max<int>(0, static_cast<int>(rot.size()) - 1));
  if (total > static_cast<double>(guards.max_embeddings))
    throw GuardError("embedding enumeration would visit " + std::to_string(static_cast<long double>(total)) +
                     " rotation systems, cap is " + std::to_string(guards.max_embeddings));

  FaceScan scan(h, std::move(bits));
  const int base = 2 * static_cast<int>(h.components().size()) - h.vertex_count() + h.edge_count();
  std::uint64_t masks = std::uint64_t{1} << free_edges.size();
  for (std::uint64_t mask = signs == Signs::twisted ? 1 : 0; mask < masks; ++mask) {
    for (std::size_t i = 0; i < free_edges.size(); ++i) e.signature[free_edges[i]] = (mask >> i & 1) ? -1 : 1;
    // Odometer over the cyclic orders at every vertex, first dart fixed.
    while (true) {
      int genus = base - scan.run(e);
      if (genus <= max_euler_genus && !visit(e, scan.masks, genus)) return;
      int vi = 0;
      for (; vi < h.vertex_count(); ++vi) {
        auto& rot = e.rotation[vi];
        if (rot.size() > 2 && std::next_permutation(rot.begin() + 1, rot.end())) break;
      }
      if (vi == h.vertex_count()) break;
    }
  }
}

}  // namespace

void for_each_embedding(const MultiGraph& h, int max_euler_genus, const Guards& guards,
                        const std::function<bool(const RotationEmbedding&)>& visit) {
  walk_embeddings(h, max_euler_genus, max_euler_genus > 0 ? Signs::all : Signs::plus, guards, {},
                  [&](const RotationEmbedding& e, const std::vector<std::uint32_t>&, int) { return visit(e); });
}

std::vector<RotationEmbedding> enumerate_embeddings(const MultiGraph& h, int max_euler_genus,
                                                    const Guards& guards) {
  std::vector<RotationEmbedding> out;
  for_each_embedding(h, max_euler_genus, guards, [&](const RotationEmbedding& e) {
    out.push_back(e);
    return true;
  });
  return out;
}

namespace {

constexpr int kNone = kInfinity;

// Fewest face masks whose union is `full`.
int min_cover(const std::vector<std::uint32_t>& faces, std::uint32_t full) {
  if (full == 0) return 0;
  std::vector<int> dist(std::size_t{full} + 1, kNone);
  dist[0] = 0;
  for (std::uint32_t m = 0; m <= full; ++m) {
    if (dist[m] == kNone) continue;
    for (std::uint32_t fm : faces)
      if (fm & ~m) dist[m | fm] = std::min(dist[m | fm], dist[m] + 1);
  }
  return dist[full];
}

// best[g][o]: fewest covering faces over embeddings of genus g, o = 1 when
// the embedding is non-orientable.
using GenusTable = std::vector<std::array<int, 2>>;

struct Component {
  MultiGraph graph;
  std::vector<std::uint32_t> bits;
  std::uint32_t full = 0;
  GenusTable best;
  bool embeddable_bound = true;  ///< passes the edge-count bound
};

Component make_component(const MultiGraph& h, const std::vector<VertexId>& vertices, int k) {
  Component c;
  c.graph = materialize(h, induced_subgraph(h, vertices));
  c.bits.assign(c.graph.vertex_count(), 0);
  int t = 0;
  for (int vi = 0; vi < c.graph.vertex_count(); ++vi)
    if (c.graph.degree(c.graph.vertices()[vi]) >= 4) {
      if (t == 20) throw GuardError("mf handles at most 20 vertices of degree >= 4 per component");
      c.bits[vi] = std::uint32_t{1} << t++;
    }
  c.full = t == 0 ? 0 : (std::uint32_t{1} << t) - 1;
  c.best.assign(k + 1, {kNone, kNone});
  std::set<std::pair<int, int>> seen;
  bool simple = true;
  for (const Edge& e : c.graph.edges())
    if (e.is_loop() || !seen.insert({std::min(e.u, e.v), std::max(e.u, e.v)}).second) simple = false;
  int n = c.graph.vertex_count();
  c.embeddable_bound = !(simple && n >= 3 && c.graph.edge_count() > 3 * (n - 2 + k));
  return c;
}

void scan_component(Component& c, int k, Signs signs, const Guards& guards) {
  if (!c.embeddable_bound) return;
  int lower = c.full ? 1 : 0;
  int o = signs == Signs::plus ? 0 : 1;
  // Genus 0 (or 1 when twisted) with the least possible cover beats every
  // other entry of its kind.
  walk_embeddings(c.graph, k, signs, guards, c.bits,
                  [&](const RotationEmbedding&, const std::vector<std::uint32_t>& faces, int g) {
                    c.best[g][o] = std::min(c.best[g][o], min_cover(faces, c.full));
                    return c.best[o][o] != lower;
                  });
}

int combine(const std::vector<Component>& comps, int k, bool at_most) {
  bool any_target = false;
  // cost[G][o]: least sum of (cover - 1) over components with targets.
  GenusTable cost(k + 1, {kNone, kNone});
  cost[0][0] = 0;
  for (const Component& comp : comps) {
    any_target = any_target || comp.full != 0;
    GenusTable next(k + 1, {kNone, kNone});
    for (int g0 = 0; g0 <= k; ++g0)
      for (int o0 = 0; o0 < 2; ++o0) {
        if (cost[g0][o0] == kNone) continue;
        for (int g1 = 0; g0 + g1 <= k; ++g1)
          for (int o1 = 0; o1 < 2; ++o1) {
            int c = comp.best[g1][o1];
            if (c == kNone) continue;
            int add = c == 0 ? 0 : c - 1;
            int& slot = next[g0 + g1][o0 | o1];
            slot = std::min(slot, cost[g0][o0] + add);
          }
      }
    cost = std::move(next);
  }
  // Each handle left over merges two regions; a crosscap left over makes an
  // orientable drawing non-orientable.
  int best = kNone;
  auto consider = [&](int sum, int merges) {
    best = std::min(best, any_target ? std::max(1, 1 + sum - merges) : 0);
  };
  for (int target = at_most ? 0 : k; target <= k; ++target)
    for (int g = 0; g <= target; ++g)
      for (int o = 0; o < 2; ++o) {
        int sum = cost[g][o];
        if (sum == kNone) continue;
        if (o == 0 && target % 2 == 0) consider(sum, (target - g) / 2);
        if (target >= 1) {
          if (o == 1) consider(sum, (target - g) / 2);
          else if (target - g >= 1) consider(sum, (target - g - 1) / 2);
        }
      }
  return best;
}

}  // namespace

int mf(const MultiGraph& h, int euler_genus, const Guards& guards, bool at_most) {
  if (euler_genus < 0) throw PreconditionError("Euler genus must be non-negative");
  const int k = euler_genus;
  std::vector<Component> comps;
  bool any_target = false;
  for (const auto& vertices : h.components()) {
    comps.push_back(make_component(h, vertices, k));
    any_target = any_target || comps.back().full != 0;
  }
  for (Component& c : comps) scan_component(c, k, Signs::plus, guards);
  int best = combine(comps, k, at_most);
  if (k == 0 || best == (any_target ? 1 : 0)) return best;
  // Non-orientable drawings only matter when the orientable ones fall short.
  for (Component& c : comps) scan_component(c, k, Signs::twisted, guards);
  return combine(comps, k, at_most);
}

CheckReport is_nice_embedding(const MultiGraph& h, const RotationEmbedding& e, std::span<const int> faces,
                              const Guards& guards) {
  if (!(e.host == h)) throw InputError("embedding is of a different graph");
  if (!is_2cell(e)) return CheckReport::fail("2-cell", "embedding is not 2-cell");
  auto traced = trace_faces(e);
  std::set<int> chosen;
  for (int f : faces) {
    if (f < 0 || f >= static_cast<int>(traced.size()))
      return CheckReport::fail("face", "no face with index " + std::to_string(f));
    if (!chosen.insert(f).second) return CheckReport::fail("face", "face " + std::to_string(f) + " listed twice");
  }
  for (VertexId v : h.vertices()) {
    if (h.degree(v) < 4) continue;
    int hits = 0;
    for (int f : chosen)
      if (std::find(traced[f].vertices.begin(), traced[f].vertices.end(), v) != traced[f].vertices.end()) ++hits;
    if (hits != 1)
      return CheckReport::fail("incidence", "vertex " + std::to_string(v) + " meets " + std::to_string(hits) +
                                                " chosen faces");
  }
  int genus = euler_genus(e);
  int m = mf(h, genus, guards);
  if (static_cast<int>(chosen.size()) != m)
    return CheckReport::fail("size", std::to_string(chosen.size()) + " faces chosen, mf is " + std::to_string(m));
  return CheckReport::pass();
}

}  // namespace tk
