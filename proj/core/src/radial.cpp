#include "tanglekit/radial.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <queue>
#include <set>

namespace tk {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Dense atom numbering of the drawing: vertices, edges, then regions.
struct AtomSpace {
  int n = 0, m = 0, f = 0;
  int size() const { return n + m + f; }
  int vertex(int vi) const { return vi; }
  int edge(int ei) const { return n + ei; }
  int region(int fi) const { return n + m + fi; }
};

// The surface cut along one radial cycle.
struct Cut {
  bool separating = false;
  std::array<int, 2> chi{};
  std::array<std::vector<int>, 2> closed;  ///< dense atoms of each closed side
  std::array<Separation, 2> separation;    ///< (Γ ∩ side, Γ ∩ other side)
};

Cut cut_along(const RadialGraph& r, const std::vector<EdgeId>& cycle, const AtomSpace& space) {
  const MultiGraph& g = r.host;
  const int n = space.n, m = space.m, nf = space.f;
  std::vector<char> on_vertex(n, 0);
  std::vector<std::vector<int>> face_positions(nf);
  for (EdgeId ke : cycle) {
    const auto& c = r.corners[ke];
    on_vertex[g.vertex_index(c.vertex)] = 1;
    face_positions[c.face].push_back(c.position);
  }
  for (auto& p : face_positions) std::sort(p.begin(), p.end());

  // Elements: edges, vertices, then two pieces per face.
  auto piece = [&](int fi, int step) {
    const auto& p = face_positions[fi];
    bool half_b = p.size() == 2 && !(step >= p[0] && step < p[1]);
    return n + m + 2 * fi + (half_b ? 1 : 0);
  };
  UnionFind uf(n + m + 2 * nf);
  for (int fi = 0; fi < nf; ++fi)
    for (int j = 0; j < r.faces[fi].length(); ++j) uf.unite(piece(fi, j), g.edge_index(r.faces[fi].edges[j]));
  for (int vi = 0; vi < n; ++vi)
    if (!on_vertex[vi])
      for (int ei : g.incident(vi)) uf.unite(m + vi, ei);

  Cut cut;
  int first = cycle.empty() ? 0 : r.corners[cycle.front()].face;
  int root_a = uf.find(n + m + 2 * first), root_b = uf.find(n + m + 2 * first + 1);
  cut.separating = root_a != root_b;
  if (!cut.separating) return cut;

  int cycle_vertices = 0, cycle_faces = 0;
  for (int vi = 0; vi < n; ++vi) cycle_vertices += on_vertex[vi];
  for (int fi = 0; fi < nf; ++fi) cycle_faces += face_positions[fi].empty() ? 0 : 1;
  std::array<int, 2> roots{root_a, root_b};
  for (int s = 0; s < 2; ++s) {
    int verts = cycle_vertices + cycle_faces, edges = static_cast<int>(cycle.size()), cells = cycle_faces;
    auto& atoms = cut.closed[s];
    Separation& sep = cut.separation[s];
    for (int vi = 0; vi < n; ++vi) {
      bool in = on_vertex[vi] || uf.find(m + vi) == roots[s];
      if (!on_vertex[vi] && in) ++verts;
      if (in) {
        atoms.push_back(space.vertex(vi));
        sep.a.vertices.push_back(g.vertices()[vi]);
      }
      if (on_vertex[vi] || uf.find(m + vi) == roots[1 - s]) sep.b.vertices.push_back(g.vertices()[vi]);
    }
    for (int ei = 0; ei < m; ++ei) {
      if (uf.find(ei) == roots[s]) {
        ++edges;
        atoms.push_back(space.edge(ei));
        sep.a.edges.push_back(g.edges()[ei].id);
      } else {
        sep.b.edges.push_back(g.edges()[ei].id);
      }
    }
    for (int fi = 0; fi < nf; ++fi) {
      bool whole = face_positions[fi].empty();
      if (whole && uf.find(n + m + 2 * fi) == roots[s]) ++cells;
      if (!whole || uf.find(n + m + 2 * fi) == roots[s]) atoms.push_back(space.region(fi));
    }
    std::sort(sep.a.edges.begin(), sep.a.edges.end());
    std::sort(sep.b.edges.begin(), sep.b.edges.end());
    cut.chi[s] = verts - edges + cells;
  }
  return cut;
}

// Simple cycles of a multigraph with at most max_len edges, as sorted edge
// id lists. `allowed` restricts to a set of edge indices when non-empty.
std::vector<std::vector<EdgeId>> short_cycles(const MultiGraph& k, int max_len, const std::vector<char>& allowed) {
  std::set<std::vector<EdgeId>> found;
  int n = k.vertex_count();
  std::vector<char> on_path(n, 0);
  std::vector<int> path_edges;
  auto ok_edge = [&](int ei) { return allowed.empty() || allowed[ei]; };
  for (int s = 0; s < n; ++s) {
    std::function<void(int)> dfs = [&](int x) {
      for (int ei : k.incident(x)) {
        if (!ok_edge(ei) || (!path_edges.empty() && ei == path_edges.back())) continue;
        const Edge& e = k.edges()[ei];
        if (e.is_loop()) continue;
        int y = k.vertex_index(e.other(k.vertices()[x]));
        if (y == s && !path_edges.empty()) {
          std::vector<EdgeId> cyc;
          for (int pe : path_edges) cyc.push_back(k.edges()[pe].id);
          cyc.push_back(e.id);
          std::sort(cyc.begin(), cyc.end());
          found.insert(cyc);
          continue;
        }
        if (y <= s || on_path[y] || static_cast<int>(path_edges.size()) + 2 > max_len) continue;
        on_path[y] = 1;
        path_edges.push_back(ei);
        dfs(y);
        path_edges.pop_back();
        on_path[y] = 0;
      }
    };
    on_path[s] = 1;
    dfs(s);
    on_path[s] = 0;
  }
  return {found.begin(), found.end()};
}

AtomSpace space_of(const RadialGraph& r) {
  return {r.host.vertex_count(), r.host.edge_count(), static_cast<int>(r.faces.size())};
}

Atom atom_at(const MultiGraph& g, const AtomSpace& space, int idx) {
  if (idx < space.n) return {Atom::Kind::vertex, g.vertices()[idx]};
  if (idx < space.n + space.m) return {Atom::Kind::edge, g.edges()[idx - space.n].id};
  return {Atom::Kind::region, idx - space.n - space.m};
}

struct Respect {
  RespectReport report;
  std::map<std::vector<EdgeId>, std::vector<int>> inside;  ///< dense atoms
};

Respect check_respect(const RadialGraph& r, const Tangle& t) {
  Respect out;
  AtomSpace space = space_of(r);
  const MultiGraph& g = r.host;
  int max_len = 2 * (t.order - 1);
  if (max_len < 2) return out;
  for (const auto& cycle : short_cycles(r.graph, max_len, {})) {
    Cut cut = cut_along(r, cycle, space);
    int chosen = -1;
    if (cut.separating)
      for (int s = 0; s < 2 && chosen < 0; ++s)
        if (cut.chi[s] == 1 &&
            std::binary_search(t.members.begin(), t.members.end(), cut.separation[s]))
          chosen = s;
    if (chosen < 0) {
      out.report.ok = false;
      out.report.cycle = cycle;
      out.report.message = cut.separating ? "no side of the radial cycle is a disk whose separation is in the tangle"
                                          : "radial cycle does not separate the surface";
      return out;
    }
    std::vector<Atom> atoms;
    for (int idx : cut.closed[chosen]) atoms.push_back(atom_at(g, space, idx));
    out.report.inside.emplace(cycle, std::move(atoms));
    out.inside.emplace(cycle, std::move(cut.closed[chosen]));
  }
  return out;
}

}  // namespace

std::string to_string(const Atom& a) {
  const char* kind = a.kind == Atom::Kind::vertex ? "vertex" : a.kind == Atom::Kind::edge ? "edge" : "region";
  return std::string(kind) + " " + std::to_string(a.id);
}

RadialGraph radial_drawing(const RotationEmbedding& e) {
  if (!is_2cell(e)) throw PreconditionError("radial drawing needs a 2-cell embedding");
  const MultiGraph& g = e.host;
  RadialGraph r;
  r.host = g;
  r.faces = trace_faces(e);
  r.face_base = g.vertices().empty() ? 0 : g.vertices().back() + 1;
  std::vector<VertexId> kv = g.vertices();
  for (int fi = 0; fi < static_cast<int>(r.faces.size()); ++fi) kv.push_back(r.face_base + fi);
  std::vector<Edge> ke;
  std::vector<std::vector<int>> at_corner(g.vertex_count());
  for (int vi = 0; vi < g.vertex_count(); ++vi) at_corner[vi].assign(e.rotation[vi].size(), -1);
  std::vector<int> twist;
  for (int fi = 0; fi < static_cast<int>(r.faces.size()); ++fi) {
    const Face& f = r.faces[fi];
    for (int p = 0; p < f.length(); ++p) {
      int id = static_cast<int>(ke.size());
      ke.push_back({id, f.vertices[p], r.face_base + fi});
      r.corners.push_back({f.vertices[p], f.corners[p], fi, p});
      at_corner[g.vertex_index(f.vertices[p])][f.corners[p]] = id;
      twist.push_back(f.twist[p]);
    }
  }
  r.graph = MultiGraph(kv, ke);
  r.embedding.host = r.graph;
  r.embedding.rotation.resize(r.graph.vertex_count());
  for (int vi = 0; vi < g.vertex_count(); ++vi)
    for (int id : at_corner[vi]) r.embedding.rotation[vi].push_back({id, 0});
  // Walks run against the rotation at their face, so list corners backwards.
  for (int fi = 0, id = 0; fi < static_cast<int>(r.faces.size()); ++fi) {
    auto& rot = r.embedding.rotation[g.vertex_count() + fi];
    for (int p = 0; p < r.faces[fi].length(); ++p, ++id) rot.push_back({id, 1});
    std::reverse(rot.begin(), rot.end());
  }
  r.embedding.signature = twist;
  r.embedding.surface_genus = e.surface_genus;
  return r;
}

RespectReport is_respectful(const RotationEmbedding& e, const Tangle& t, const Guards& guards) {
  if (2 * (t.order - 1) > guards.max_metric_walk_length)
    throw GuardError("radial cycles up to length " + std::to_string(2 * (t.order - 1)) +
                     " exceed the walk-length cap " + std::to_string(guards.max_metric_walk_length));
  return check_respect(radial_drawing(e), t).report;
}

int AtomMetric::index(const Atom& a) const {
  auto it = std::lower_bound(atoms.begin(), atoms.end(), a, [](const Atom& x, const Atom& y) {
    return std::pair(static_cast<int>(x.kind), x.id) < std::pair(static_cast<int>(y.kind), y.id);
  });
  if (it == atoms.end() || !(*it == a)) throw InputError("no such atom: " + to_string(a));
  return static_cast<int>(it - atoms.begin());
}

AtomMetric atom_metric(const RotationEmbedding& e, const Tangle& t, const Guards& guards) {
  int max_len = 2 * t.order - 2;
  if (max_len > guards.max_metric_walk_length)
    throw GuardError("closed walks up to length " + std::to_string(max_len) + " exceed the walk-length cap " +
                     std::to_string(guards.max_metric_walk_length));
  RadialGraph r = radial_drawing(e);
  Respect respect = check_respect(r, t);
  if (!respect.report.ok) throw PreconditionError("drawing is not respectful: " + respect.report.message);

  const MultiGraph& g = e.host;
  const MultiGraph& k = r.graph;
  AtomSpace space = space_of(r);
  AtomMetric out;
  out.theta = t.order;
  for (int i = 0; i < space.size(); ++i) out.atoms.push_back(atom_at(g, space, i));
  out.table.assign(space.size(), std::vector<int>(space.size(), t.order));
  for (int i = 0; i < space.size(); ++i) out.table[i][i] = 0;
  if (max_len < 2) {
    out.uncovered = out.atoms;
    return out;
  }

  // Radial vertex -> atom of the drawing.
  auto radial_atom = [&](int kvi) { return kvi < space.n ? space.vertex(kvi) : space.region(kvi - space.n); };

  // Distances to each start, to prune walks that cannot close in time.
  int kn = k.vertex_count();
  std::vector<std::vector<int>> dist(kn, std::vector<int>(kn, kInfinity));
  for (int s = 0; s < kn; ++s) {
    std::queue<int> q;
    dist[s][s] = 0;
    q.push(s);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int ei : k.incident(x)) {
        int y = k.vertex_index(k.edges()[ei].other(k.vertices()[x]));
        if (dist[s][y] == kInfinity) {
          dist[s][y] = dist[s][x] + 1;
          q.push(y);
        }
      }
    }
  }

  // Each closed walk matters only through the subgraph it traces.
  std::map<std::vector<int>, int> traced;
  std::vector<int> walk;
  for (int s = 0; s < kn; ++s) {
    traced.emplace(std::vector<int>{-1 - s}, 0);
    std::function<void(int)> extend = [&](int x) {
      for (int ei : k.incident(x)) {
        int y = k.vertex_index(k.edges()[ei].other(k.vertices()[x]));
        int len = static_cast<int>(walk.size()) + 1;
        if (len + dist[s][y] > max_len) continue;
        walk.push_back(ei);
        if (y == s) {
          std::vector<int> key(walk);
          std::sort(key.begin(), key.end());
          key.erase(std::unique(key.begin(), key.end()), key.end());
          auto [it, fresh] = traced.emplace(std::move(key), len);
          if (!fresh) it->second = std::min(it->second, len);
        }
        extend(y);
        walk.pop_back();
      }
    };
    extend(s);
  }

  std::vector<char> covered(space.size(), 0);
  std::vector<char> allowed(k.edge_count(), 0);
  for (const auto& [key, len] : traced) {
    std::vector<char> in(space.size(), 0);
    if (key.size() == 1 && key[0] < 0) {
      in[radial_atom(-1 - key[0])] = 1;
    } else {
      for (int ei : key) {
        in[radial_atom(k.vertex_index(k.edges()[ei].u))] = 1;
        in[radial_atom(k.vertex_index(k.edges()[ei].v))] = 1;
        allowed[ei] = 1;
      }
      for (const auto& cycle : short_cycles(k, static_cast<int>(key.size()), allowed))
        for (int idx : respect.inside.at(cycle)) in[idx] = 1;
      for (int ei : key) allowed[ei] = 0;
    }
    std::vector<int> members;
    for (int i = 0; i < space.size(); ++i)
      if (in[i]) {
        members.push_back(i);
        covered[i] = 1;
      }
    int half = len / 2;
    for (int a : members)
      for (int b : members)
        if (a != b) out.table[a][b] = std::min(out.table[a][b], half);
  }
  for (int i = 0; i < space.size(); ++i)
    if (!covered[i]) out.uncovered.push_back(out.atoms[i]);
  return out;
}

CheckReport is_lambda_zone(const RotationEmbedding& e, const AtomMetric& m, const Atom& x, const ZoneWitness& w,
                           int lambda) {
  const MultiGraph& g = e.host;
  auto faces = trace_faces(e);
  m.index(x);
  if (w.inside_face < 0 || w.inside_face >= static_cast<int>(faces.size()))
    throw InputError("witness names no face " + std::to_string(w.inside_face));
  std::vector<char> on_edge(g.edge_count(), 0), on_vertex(g.vertex_count(), 0);
  std::vector<int> deg(g.vertex_count(), 0);
  for (EdgeId id : w.cycle) {
    if (!g.has_edge(id)) throw InputError("witness names unknown edge " + std::to_string(id));
    int ei = g.edge_index(id);
    if (on_edge[ei]) throw InputError("witness lists edge " + std::to_string(id) + " twice");
    on_edge[ei] = 1;
    const Edge& ed = g.edges()[ei];
    ++deg[g.vertex_index(ed.u)];
    ++deg[g.vertex_index(ed.v)];
  }
  {
    SubgraphRef ref;
    for (int vi = 0; vi < g.vertex_count(); ++vi) {
      if (deg[vi] != 0 && deg[vi] != 2) throw InputError("witness edges do not form a cycle");
      if (deg[vi]) {
        on_vertex[vi] = 1;
        ref.vertices.push_back(g.vertices()[vi]);
      }
    }
    ref.edges = w.cycle;
    std::sort(ref.edges.begin(), ref.edges.end());
    if (ref.edges.empty() || !materialize(g, ref).is_connected())
      throw InputError("witness edges do not form a cycle");
  }

  const int n = g.vertex_count(), me = g.edge_count(), nf = static_cast<int>(faces.size());
  UnionFind uf(nf + me + n);
  for (int fi = 0; fi < nf; ++fi)
    for (EdgeId id : faces[fi].edges)
      if (!on_edge[g.edge_index(id)]) uf.unite(fi, nf + g.edge_index(id));
  for (int vi = 0; vi < n; ++vi)
    if (!on_vertex[vi])
      for (int ei : g.incident(vi)) uf.unite(nf + me + vi, nf + ei);

  if (x.kind == Atom::Kind::edge && lambda < 2)
    return CheckReport::fail("edge-lambda", "an edge atom needs λ >= 2");

  int side = uf.find(w.inside_face);
  std::vector<int> occurrences_inside(me, 0), occurrences(me, 0);
  for (int fi = 0; fi < nf; ++fi)
    for (EdgeId id : faces[fi].edges) {
      ++occurrences[g.edge_index(id)];
      if (uf.find(fi) == side) ++occurrences_inside[g.edge_index(id)];
    }
  for (int ei = 0; ei < me; ++ei)
    if (on_edge[ei] && occurrences_inside[ei] != 1)
      return CheckReport::fail("disk", "the cycle does not bound the chosen side along edge " +
                                           std::to_string(g.edges()[ei].id));

  std::vector<Atom> open, closed;
  int verts = 0, edges = 0, cells = 0;
  for (int vi = 0; vi < n; ++vi) {
    bool inside = !on_vertex[vi] && uf.find(nf + me + vi) == side;
    if (inside) open.push_back({Atom::Kind::vertex, g.vertices()[vi]});
    if (inside || on_vertex[vi]) {
      ++verts;
      closed.push_back({Atom::Kind::vertex, g.vertices()[vi]});
    }
  }
  for (int ei = 0; ei < me; ++ei) {
    bool inside = !on_edge[ei] && uf.find(nf + ei) == side;
    if (inside) open.push_back({Atom::Kind::edge, g.edges()[ei].id});
    if (inside || on_edge[ei]) {
      ++edges;
      closed.push_back({Atom::Kind::edge, g.edges()[ei].id});
    }
  }
  for (int fi = 0; fi < nf; ++fi)
    if (uf.find(fi) == side) {
      ++cells;
      open.push_back({Atom::Kind::region, fi});
      closed.push_back({Atom::Kind::region, fi});
    }
  if (verts - edges + cells != 1)
    return CheckReport::fail("disk", "the chosen side is not a disk (Euler characteristic " +
                                         std::to_string(verts - edges + cells) + ")");
  if (std::find(open.begin(), open.end(), x) == open.end())
    return CheckReport::fail("contains", to_string(x) + " is not inside the disk");
  for (const Atom& y : closed)
    if (m.at(x, y) > lambda)
      return CheckReport::fail("distance", to_string(y) + " is at distance " + std::to_string(m.at(x, y)));
  return CheckReport::pass();
}

}  // namespace tk
