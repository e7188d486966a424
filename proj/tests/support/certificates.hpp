#pragma once

// Hand-built outcome and arrangement certificates on small grids and the apex
// Petersen graph, shared by the certificate tests and the acceptance run.

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "tanglekit/certify.hpp"
#include "tanglekit/minor.hpp"
#include "tanglekit/tangle.hpp"

namespace certs {

using namespace tk;

using Ids = std::vector<VertexId>;
using Pairs = std::vector<std::pair<VertexId, VertexId>>;
using Point = std::pair<double, double>;

inline Guards roomy() {
  Guards g;
  g.override_vertex_caps = true;
  return g;
}

// Rotations read off a straight-line drawing; an edge listed in `bend`
// leaves its ends towards that point instead of the other end.
inline RotationEmbedding drawn(const MultiGraph& h, const std::map<VertexId, Point>& at,
                        const std::map<EdgeId, Point>& bend = {}) {
  RotationEmbedding e;
  e.host = h;
  e.signature.assign(h.edge_count(), 1);
  e.rotation.resize(h.vertex_count());
  for (int vi = 0; vi < h.vertex_count(); ++vi) {
    VertexId v = h.vertices()[vi];
    std::vector<std::pair<double, EdgeEnd>> ends;
    for (int ei : h.incident(vi)) {
      const Edge& ed = h.edges()[ei];
      auto it = bend.find(ed.id);
      Point to = it != bend.end() ? it->second : at.at(ed.other(v));
      double angle = std::atan2(to.second - at.at(v).second, to.first - at.at(v).first);
      ends.push_back({angle, {ed.id, ed.u == v ? 0 : 1}});
    }
    std::sort(ends.begin(), ends.end());
    for (const auto& [angle, end] : ends) e.rotation[vi].push_back(end);
  }
  return e;
}

inline Point bent(const std::map<VertexId, Point>& at, VertexId u, VertexId v, double off) {
  auto [x1, y1] = at.at(u);
  auto [x2, y2] = at.at(v);
  return {(x1 + x2) / 2 - off * (y2 - y1), (y1 + y2) / 2 + off * (x2 - x1)};
}

inline int face_with(const RotationEmbedding& e, std::vector<EdgeId> edges) {
  std::sort(edges.begin(), edges.end());
  std::vector<Face> faces = trace_faces(e);
  for (int i = 0; i < static_cast<int>(faces.size()); ++i) {
    std::vector<EdgeId> f = faces[i].edges;
    std::sort(f.begin(), f.end());
    if (f == edges) return i;
  }
  throw std::logic_error("no face bounded by exactly those edges");
  return -1;
}

inline EdgeId edge_between(const MultiGraph& g, VertexId u, VertexId v) {
  for (const Edge& e : g.edges())
    if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) return e.id;
  throw std::logic_error("no such edge");
  return -1;
}

inline Society edge_society(const MultiGraph& g, EdgeId e) {
  const Edge& ed = g.edge(e);
  return {{{std::min(ed.u, ed.v), std::max(ed.u, ed.v)}, {e}}, {ed.u, ed.v}};
}

inline Tangle first_tangle(const MultiGraph& g, int order) {
  std::vector<Tangle> ts = enumerate_tangles(g, order, roomy());
  if (ts.empty()) throw std::logic_error("fixture has no tangle");
  return ts.front();
}

inline MultiGraph octahedron() {
  Pairs ps;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      if (!(i % 2 == 0 && j == i + 1)) ps.emplace_back(i, j);
  return MultiGraph::from_edge_pairs(6, ps);
}

inline std::map<VertexId, Point> grid_points(int n) {
  std::map<VertexId, Point> at;
  for (int v = 0; v < n * n; ++v) at[v] = {v % n, v / n};
  return at;
}

// Societies drawn on the 4x4 grid: one big society plus a single-edge
// society for every remaining edge, each such edge doubled in the frame
// so that the pair bounds its disk.
inline ArrangementCertificate grid_arrangement(const MultiGraph& g, const Society& big,
                                        const std::vector<std::pair<VertexId, VertexId>>& big_cycle) {
  ArrangementCertificate c;
  c.segregation.push_back(big);
  std::map<VertexId, Point> at = grid_points(4);
  std::vector<VertexId> frame_vs;
  for (VertexId v : g.vertices())
    if (!std::binary_search(big.graph.vertices.begin(), big.graph.vertices.end(), v) ||
        std::find(big.boundary.begin(), big.boundary.end(), v) != big.boundary.end())
      frame_vs.push_back(v);
  std::vector<Edge> frame_es;
  std::map<EdgeId, Point> bend;
  std::vector<EdgeId> cycle;
  for (const auto& [u, v] : big_cycle) {
    EdgeId id = static_cast<EdgeId>(frame_es.size());
    frame_es.push_back({id, u, v});
    cycle.push_back(id);
  }
  std::vector<std::pair<EdgeId, EdgeId>> lenses;
  for (const Edge& e : g.edges()) {
    if (std::binary_search(big.graph.edges.begin(), big.graph.edges.end(), e.id)) continue;
    c.segregation.push_back(edge_society(g, e.id));
    EdgeId a = 100 + 2 * e.id, b = a + 1;
    frame_es.push_back({a, e.u, e.v});
    frame_es.push_back({b, e.u, e.v});
    bend[b] = bent(at, e.u, e.v, 0.2);
    lenses.emplace_back(a, b);
  }
  c.frame = drawn(MultiGraph(frame_vs, frame_es), at, bend);
  c.disks.push_back({cycle, face_with(c.frame, cycle)});
  for (const auto& [a, b] : lenses) c.disks.push_back({{a, b}, face_with(c.frame, {a, b})});
  for (VertexId v : boundary_vertices(c.segregation)) c.placement[v] = v;
  return c;
}

struct Fixture {
  MultiGraph g;
  Tangle t;
  MultiGraph h;
  OutcomeCertificate cert;
  OutcomeParams params;
};

inline const MultiGraph& grid4() {
  static const MultiGraph g = grid_graph(4, 4);
  return g;
}

inline const Tangle& grid4_tangle() {
  static const Tangle t = first_tangle(grid4(), 4);
  return t;
}

// The central square is the one vortex; K5 cannot be drawn in the plane.
inline Fixture square_fixture() {
  const MultiGraph& g = grid4();
  Society square{induced_subgraph(g, Ids{5, 6, 9, 10}), {5, 6, 10, 9}};
  Fixture f{g, grid4_tangle(), complete_graph(5), {}, {}};
  f.cert.variant = OutcomeCertificate::Variant::arranged;
  f.cert.arrangement = grid_arrangement(g, square, {{5, 6}, {6, 10}, {10, 9}, {9, 5}});
  f.cert.vortices = {0};
  f.cert.drawing = OutcomeCertificate::Drawing::impossible;
  f.params = {4, 0, 1, 2, 0};
  return f;
}

// An octagon vortex swallowing the four central vertices; the octahedron
// needs two faces to cover its vertices.
inline Fixture octagon_fixture() {
  const MultiGraph& g = grid4();
  Ids ring{1, 2, 7, 11, 14, 13, 8, 4};
  Society oct{induced_subgraph(g, Ids{1, 2, 4, 5, 6, 7, 8, 9, 10, 11, 13, 14}), ring};
  std::vector<std::pair<VertexId, VertexId>> cycle;
  for (size_t i = 0; i < ring.size(); ++i) cycle.emplace_back(ring[i], ring[(i + 1) % ring.size()]);
  Fixture f{g, grid4_tangle(), octahedron(), {}, {}};
  f.cert.variant = OutcomeCertificate::Variant::arranged;
  f.cert.arrangement = grid_arrangement(g, oct, cycle);
  f.cert.vortices = {0};
  f.cert.drawing = OutcomeCertificate::Drawing::few_regions;
  f.cert.chosen = {0};
  f.params = {4, 0, 1, vortex_depth(g, oct), 0};
  return f;
}

// Petersen graph with an apex 10 joined to every Petersen vertex.
inline Pairs apex_petersen_pairs() {
  Pairs ps;
  MultiGraph petersen = petersen_graph();
  for (const Edge& e : petersen.edges()) ps.emplace_back(e.u, e.v);
  for (int i = 0; i < 10; ++i) ps.emplace_back(10, i);
  return ps;
}

// The apex Petersen graph with a path 10-11-12 hanging off the apex;
// removing the apex leaves the path as its own component.
inline Fixture captured_fixture() {
  static const MultiGraph g = [] {
    Pairs ps = apex_petersen_pairs();
    ps.emplace_back(10, 11);
    ps.emplace_back(11, 12);
    return MultiGraph::from_edge_pairs(13, ps);
  }();
  static const Tangle t = first_tangle(g, 5);
  Fixture f{g, t, complete_graph(5), {}, {}};
  f.cert.variant = OutcomeCertificate::Variant::captured;
  f.cert.z = {10};
  f.params = {4, 1, 0, 0, 0};
  return f;
}

inline Verdict run(const Fixture& f, bool trust = false) {
  return check_outcome(f.g, f.t, f.h, f.cert, f.params, roomy(), trust);
}

inline std::vector<std::string> names(std::initializer_list<const char*> xs) { return {xs.begin(), xs.end()}; }

inline std::string joined(const std::vector<std::string>& xs) {
  std::string out;
  for (const std::string& x : xs) out += (out.empty() ? "" : ",") + x;
  return out;
}

inline std::string witness(const Verdict& v, const std::string& clause) {
  for (const ClauseResult& c : v.clauses)
    if (c.name == clause) return c.witness;
  return "<missing>";
}

// Corners 0..3 of a tetrahedron; each face abc carries two extra vertices
// joined to a, b and c, and is one 3-boundary society.
struct Tetra {
  MultiGraph g;
  ArrangementCertificate cert;
};

inline Tetra tetra_fixture() {
  std::vector<Ids> faces{{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 2, 3}};
  Pairs ps;
  for (int f = 0; f < 4; ++f)
    for (int k : {4 + 2 * f, 5 + 2 * f})
      for (VertexId c : faces[f]) ps.emplace_back(k, c);
  Tetra t;
  t.g = MultiGraph::from_edge_pairs(12, ps);
  for (int f = 0; f < 4; ++f) {
    Ids vs{faces[f][0], faces[f][1], faces[f][2], 4 + 2 * f, 5 + 2 * f};
    std::sort(vs.begin(), vs.end());
    std::vector<EdgeId> es;
    for (int k = 0; k < 6; ++k) es.push_back(6 * f + k);
    t.cert.segregation.push_back({{vs, es}, faces[f]});
  }
  std::map<VertexId, Point> at{{0, {0, 0}}, {1, {0, 2}}, {2, {-1.7, -1}}, {3, {1.7, -1}}};
  std::vector<Edge> es;
  std::map<EdgeId, Point> bend;
  for (VertexId u = 0; u < 4; ++u)
    for (VertexId v = u + 1; v < 4; ++v) {
      EdgeId a = static_cast<EdgeId>(es.size());
      es.push_back({a, u, v});
      es.push_back({a + 1, u, v});
      bend[a] = bent(at, u, v, 0.05);
      bend[a + 1] = bent(at, u, v, -0.05);
    }
  t.cert.frame = drawn(MultiGraph({0, 1, 2, 3}, es), at, bend);
  std::vector<Face> traced = trace_faces(t.cert.frame);
  for (Ids corners : faces) {
    std::sort(corners.begin(), corners.end());
    for (int i = 0; i < static_cast<int>(traced.size()); ++i) {
      Ids vs = traced[i].vertices;
      std::sort(vs.begin(), vs.end());
      if (traced[i].length() == 3 && vs == corners) t.cert.disks.push_back({traced[i].edges, i});
    }
  }
  if (t.cert.disks.size() != 4) throw std::logic_error("tetrahedron frame lost a face");
  for (VertexId v = 0; v < 4; ++v) t.cert.placement[v] = v;
  return t;
}

// One society S of g with boundary (b0, b1), drawn as a lens between the
// two placed vertices.
inline ArrangementCertificate lens_arrangement(const MultiGraph& g, VertexId b0, VertexId b1) {
  ArrangementCertificate c;
  c.segregation.push_back({whole(g), {b0, b1}});
  std::map<VertexId, Point> at{{b0, {0, 0}}, {b1, {2, 0}}};
  c.frame = drawn(MultiGraph({std::min(b0, b1), std::max(b0, b1)}, {{0, b0, b1}, {1, b0, b1}}), at,
                  {{1, bent(at, b0, b1, 0.3)}});
  c.disks.push_back({{0, 1}, 0});
  c.placement = {{b0, b0}, {b1, b1}};
  return c;
}

// A single society on the n-cycle with the given boundary, drawn as a
// regular polygon whose inside is the disk.
inline ArrangementCertificate polygon_arrangement(int n, Ids boundary) {
  MultiGraph g = cycle_graph(n);
  ArrangementCertificate c;
  c.segregation.push_back({whole(g), std::move(boundary)});
  std::map<VertexId, Point> at;
  for (int i = 0; i < n; ++i) at[i] = {std::cos(2 * M_PI * i / n), std::sin(2 * M_PI * i / n)};
  c.frame = drawn(g, at);
  std::vector<EdgeId> all;
  for (const Edge& e : g.edges()) all.push_back(e.id);
  c.disks.push_back({all, 0});
  for (VertexId v : boundary_vertices(c.segregation)) c.placement[v] = v;
  return c;
}

// Two 4-cycles drawn side by side; `shared` glues them at vertex 0.
struct TwoSquares {
  MultiGraph g;
  ArrangementCertificate cert;
};

inline TwoSquares two_squares(bool shared) {
  TwoSquares s;
  Ids b = shared ? Ids{0, 4, 5, 6} : Ids{4, 5, 6, 7};
  Pairs ps{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {b[0], b[1]}, {b[1], b[2]}, {b[2], b[3]}, {b[3], b[0]}};
  s.g = MultiGraph::from_edge_pairs(shared ? 7 : 8, ps);
  s.cert.segregation = {{induced_subgraph(s.g, Ids{0, 1, 2, 3}), {0, 1, 2, 3}},
                        {induced_subgraph(s.g, b), b}};
  std::map<VertexId, Point> at{{0, {1, 0}}, {1, {0, 0}}, {2, {0, 1}}, {3, {1, 1}}};
  if (shared) {
    at[4] = {2, 0};
    at[5] = {2, -1};
    at[6] = {1, -1};
  } else {
    at[4] = {3, 0};
    at[5] = {4, 0};
    at[6] = {4, 1};
    at[7] = {3, 1};
  }
  std::vector<Edge> es;
  for (int i = 0; i < 8; ++i) es.push_back({i, ps[i].first, ps[i].second});
  if (!shared) es.push_back({8, 0, 4});
  std::vector<VertexId> vs = s.g.vertices();
  s.cert.frame = drawn(MultiGraph(vs, es), at);
  s.cert.disks = {{{0, 1, 2, 3}, face_with(s.cert.frame, {0, 1, 2, 3})},
                  {{4, 5, 6, 7}, face_with(s.cert.frame, {4, 5, 6, 7})}};
  for (VertexId v : vs) s.cert.placement[v] = v;
  return s;
}

// Single-edge societies over the kept edges of the 4x4 grid, each edge
// doubled in the frame.
struct EdgeSegregation {
  MultiGraph g;
  ArrangementCertificate cert;
};

inline EdgeSegregation edge_segregation(const std::vector<EdgeId>& keep) {
  const MultiGraph& grid = grid4();
  std::vector<Edge> es;
  for (EdgeId e : keep) es.push_back(grid.edge(e));
  EdgeSegregation s;
  s.g = MultiGraph(grid.vertices(), es);
  std::map<VertexId, Point> at = grid_points(4);
  std::vector<Edge> frame_es;
  std::map<EdgeId, Point> bend;
  for (const Edge& e : es) {
    s.cert.segregation.push_back(edge_society(s.g, e.id));
    frame_es.push_back({2 * e.id, e.u, e.v});
    frame_es.push_back({2 * e.id + 1, e.u, e.v});
    bend[2 * e.id + 1] = bent(at, e.u, e.v, 0.2);
  }
  s.cert.frame = drawn(MultiGraph(grid.vertices(), frame_es), at, bend);
  for (const Edge& e : es) s.cert.disks.push_back({{2 * e.id, 2 * e.id + 1}, face_with(s.cert.frame, {2 * e.id, 2 * e.id + 1})});
  for (VertexId v : grid.vertices()) s.cert.placement[v] = v;
  return s;
}

inline std::vector<VertexId> map_ids(const std::map<VertexId, VertexId>& p, const Ids& xs, bool sort) {
  Ids out;
  for (VertexId x : xs) out.push_back(p.at(x));
  if (sort) std::sort(out.begin(), out.end());
  return out;
}

inline Fixture relabelled(const Fixture& f, std::mt19937& rng) {
  Ids perm(f.g.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  for (VertexId& v : perm) v = 3 * v + 7;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::map<VertexId, VertexId> p;
  for (int i = 0; i < f.g.vertex_count(); ++i) p[f.g.vertices()[i]] = perm[i];
  auto ref = [&](const SubgraphRef& r) { return SubgraphRef{map_ids(p, r.vertices, true), r.edges}; };

  Fixture out = f;
  out.g = relabel(f.g, perm);
  out.t.members.clear();
  for (const Separation& s : f.t.members) out.t.members.push_back({ref(s.a), ref(s.b)});
  std::sort(out.t.members.begin(), out.t.members.end());
  out.cert.z = map_ids(p, f.cert.z, true);
  ArrangementCertificate& a = out.cert.arrangement;
  for (Society& s : a.segregation) {
    s.graph = ref(s.graph);
    s.boundary = map_ids(p, s.boundary, false);
  }
  a.placement.clear();
  for (const auto& [v, x] : f.cert.arrangement.placement) a.placement[p.at(v)] = x;
  return out;
}

struct MutationCase {
  std::string label;
  std::function<Fixture()> make;
  std::vector<std::string> failed;
  bool trust = false;
};

// Valid certificates and single-clause breakages, each with the clauses the
// checker must name.
inline std::vector<MutationCase> mutation_cases() {
  auto with = [](Fixture (*base)(), std::function<void(Fixture&)> mutate) {
    return [base, mutate] {
      Fixture f = base();
      mutate(f);
      return f;
    };
  };
  auto reverse_member = [](Fixture& f) {
    for (const Separation& s : f.t.members)
      if (s.order() == 2 && s.a.vertices.size() == 3) {
        f.t.members.push_back(s.reversed());
        break;
      }
  };
  auto drop_edge_society = [](Fixture& f) {
    f.cert.arrangement.segregation.pop_back();
    f.cert.arrangement.disks.pop_back();
  };
  auto square_octahedron = [](Fixture& f) {
    f.h = octahedron();
    f.cert.drawing = OutcomeCertificate::Drawing::few_regions;
    f.cert.chosen = {0};
  };

  return {
      {"square", square_fixture, {}},
      {"octagon", octagon_fixture, {}},
      {"captured", captured_fixture, {}},
      {"square trusted", square_fixture, {}, true},
      {"octagon trusted", octagon_fixture, {}, true},
      {"captured trusted", captured_fixture, {}, true},
      {"square loose xi", with(square_fixture, [](Fixture& f) { f.params.xi = 3; }), {}},
      {"square loose kappa", with(square_fixture, [](Fixture& f) { f.params.kappa = 4; }), {}},
      {"square loose rho", with(square_fixture, [](Fixture& f) { f.params.rho = 5; }), {}},
      {"square loose genus", with(square_fixture, [](Fixture& f) { f.params.genus = 2; }), {}},
      {"octagon loose kappa", with(octagon_fixture, [](Fixture& f) { f.params.kappa = 2; }), {}},
      {"octagon loose rho", with(octagon_fixture, [](Fixture& f) { f.params.rho += 1; }), {}},
      {"octagon loose genus", with(octagon_fixture, [](Fixture& f) { f.params.genus = 1; }), {}},
      {"octagon loose xi", with(octagon_fixture, [](Fixture& f) { f.params.xi = 2; }), {}},
      {"captured loose xi", with(captured_fixture, [](Fixture& f) { f.params.xi = 5; }), {}},
      {"square K33", with(square_fixture, [](Fixture& f) { f.h = complete_bipartite(3, 3); }), {}},
      {"square K6", with(square_fixture, [](Fixture& f) { f.h = complete_graph(6); }), {}},
      {"square K33 trusted", with(square_fixture, [](Fixture& f) { f.h = complete_bipartite(3, 3); }), {}, true},
      {"captured loose kappa", with(captured_fixture, [](Fixture& f) { f.params.kappa = 3; }), {}},

      {"captured bad tangle", with(captured_fixture, reverse_member), {"tangle"}},
      {"octagon bad tangle", with(octagon_fixture, reverse_member), {"tangle"}},
      {"captured big Z", with(captured_fixture, [](Fixture& f) { f.params.xi = 0; }), {"z-size"}},
      {"square missing society", with(square_fixture, drop_edge_society), {"segregation"}},
      {"octagon missing society", with(octagon_fixture, drop_edge_society), {"segregation"}},
      {"square undeclared vortex", with(square_fixture, [](Fixture& f) { f.cert.vortices.clear(); }),
       {"small-boundary"}},
      {"square too many vortices", with(square_fixture, [](Fixture& f) { f.params.kappa = 0; }), {"vortex-count"}},
      {"octagon too many vortices", with(octagon_fixture, [](Fixture& f) { f.params.kappa = 0; }), {"vortex-count"}},
      {"square too deep", with(square_fixture, [](Fixture& f) { f.params.rho = 1; }), {"vortex-depth"}},
      {"octagon too deep", with(octagon_fixture, [](Fixture& f) { f.params.rho -= 1; }), {"vortex-depth"}},
      {"square placement clash", with(square_fixture, [](Fixture& f) { f.cert.arrangement.placement[0] = 1; }),
       {"arrangement"}},
      {"octagon placement swap",
       with(octagon_fixture, [](Fixture& f) { std::swap(f.cert.arrangement.placement[0], f.cert.arrangement.placement[1]); }),
       {"arrangement"}},
      {"octagon boundary order",
       with(octagon_fixture, [](Fixture& f) { std::swap(f.cert.arrangement.segregation[0].boundary[0],
                                                        f.cert.arrangement.segregation[0].boundary[1]); }),
       {"arrangement"}},
      {"square drawable pattern", with(square_fixture, [](Fixture& f) { f.h = complete_graph(4); }), {"not-drawable"}},
      {"octagon undrawable pattern", with(octagon_fixture, [](Fixture& f) { f.h = complete_graph(5); }), {"mf"}},
      {"octagon nothing chosen", with(octagon_fixture, [](Fixture& f) { f.cert.chosen.clear(); }), {"coverage"}},
      {"square free centre", with(square_fixture, square_octahedron), {"coverage"}},
      {"grid claimed captured", with(square_fixture, [](Fixture& f) { f.cert.variant = OutcomeCertificate::Variant::captured; }),
       {"capture"}},
      {"captured apex kept", with(captured_fixture, [](Fixture& f) {
         f.cert.z.clear();
         f.params.xi = 1;
       }),
       {"capture"}},
  };
}

}  // namespace certs
