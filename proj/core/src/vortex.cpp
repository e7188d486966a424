#include "tanglekit/vortex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "id_sets.hpp"
#include "tanglekit/paths.hpp"

namespace tk {

using detail::contains;
using detail::includes;
using detail::sorted_ids;

namespace {

std::string id(int v) { return std::to_string(v); }

// Boundary positions first..first+len-1, read cyclically.
std::vector<VertexId> arc(const std::vector<VertexId>& cyc, int first, int len) {
  std::vector<VertexId> out;
  int n = static_cast<int>(cyc.size());
  for (int k = 0; k < len; ++k) out.push_back(cyc[(first + k) % n]);
  return out;
}

bool same_cyclic_order(const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  auto it = std::find(b.begin(), b.end(), a.front());
  if (it == b.end()) return false;
  return arc(b, static_cast<int>(it - b.begin()), static_cast<int>(b.size())) == a;
}

void check_boundary(const std::vector<VertexId>& boundary, const std::vector<VertexId>& vertices,
                    const std::string& what) {
  std::vector<VertexId> sorted = boundary;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InputError(what + " repeats a vertex");
  for (VertexId v : boundary)
    if (!contains(vertices, v)) throw InputError(what + " vertex " + id(v) + " is not in the graph");
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Vertices of the cycle formed by `edges` in h, sorted; InputError when the
// edges do not form exactly one cycle.
std::vector<VertexId> cycle_vertices(const MultiGraph& h, const std::vector<EdgeId>& edges) {
  if (edges.empty()) throw InputError("empty cycle");
  std::vector<EdgeId> sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InputError("cycle repeats an edge");
  std::map<VertexId, int> degree;
  std::vector<Edge> es;
  for (EdgeId e : edges) {
    if (!h.has_edge(e)) throw InputError("cycle edge " + id(e) + " is not in the graph");
    const Edge& edge = h.edge(e);
    ++degree[edge.u];
    ++degree[edge.v];
    es.push_back(edge);
  }
  std::vector<VertexId> vs;
  for (auto [v, d] : degree) {
    if (d != 2) throw InputError("edge list is not a cycle at vertex " + id(v));
    vs.push_back(v);
  }
  if (!MultiGraph(vs, es).is_connected()) throw InputError("edge list is not a single cycle");
  return vs;
}

// Is the cyclic sequence `seq` a subsequence of the closed walk, read
// forwards, with positions restricted to [from, from+len] taken cyclically?
// A window covering the whole walk is cyclic itself.
bool fits(const std::vector<VertexId>& walk, int from, int len, const std::vector<VertexId>& seq) {
  if (seq.empty()) return true;
  int l = static_cast<int>(walk.size());
  int k = static_cast<int>(seq.size());
  for (int r = 0; r < k; ++r) {
    int next = 0;
    for (int p = 0; p <= len && next < k; ++p)
      if (walk[(from + p) % l] == seq[(r + next) % k]) ++next;
    if (next == k) return true;
  }
  return false;
}

bool fits_cyclic(const std::vector<VertexId>& walk, const std::vector<VertexId>& seq) {
  if (seq.empty()) return true;
  int l = static_cast<int>(walk.size());
  for (int s = 0; s < l; ++s) {
    if (walk[s] != seq.front()) continue;
    int next = 1;
    for (int p = 1; p < l && next < static_cast<int>(seq.size()); ++p)
      if (walk[(s + p) % l] == seq[next]) ++next;
    if (next == static_cast<int>(seq.size())) return true;
  }
  return false;
}

// Both sequences on one walk, in disjoint arcs that may share their ends.
bool fits_apart(const std::vector<VertexId>& walk, const std::vector<VertexId>& a,
                const std::vector<VertexId>& b) {
  int l = static_cast<int>(walk.size());
  for (int s = 0; s < l; ++s)
    for (int m = 0; m <= l; ++m)
      if (fits(walk, s, m, a) && fits(walk, s + m, l - m, b)) return true;
  return false;
}

std::vector<VertexId> reversed(std::vector<VertexId> v) {
  std::reverse(v.begin(), v.end());
  return v;
}

MultiGraph witness_host(const MultiGraph& g, const Neighborhood& n, const RuralWitness& w) {
  validate_subgraph(g, n.graph);
  check_boundary(n.outer, n.graph.vertices, "outer boundary");
  check_boundary(n.inner, n.graph.vertices, "inner boundary");
  MultiGraph h = materialize(g, n.graph);
  if (!(w.embedding.host == h)) throw InputError("witness embedding draws a different graph");
  validate_embedding(w.embedding);
  return h;
}

}  // namespace

void validate_society(const MultiGraph& g, const Society& s) {
  validate_subgraph(g, s.graph);
  check_boundary(s.boundary, s.graph.vertices, "boundary");
}

int vortex_depth(const MultiGraph& g, const Society& s) {
  validate_society(g, s);
  int n = static_cast<int>(s.boundary.size());
  if (n <= 1) return 0;
  MultiGraph h = materialize(g, s.graph);
  int depth = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      auto src = arc(s.boundary, i, j - i);
      auto dst = arc(s.boundary, j, n - (j - i));
      depth = std::max(depth, max_disjoint_paths(h, src, dst).count);
    }
  return depth;
}

bool is_rho_vortex(const MultiGraph& g, const Society& s, int rho) { return vortex_depth(g, s) <= rho; }

LinearDecomposition vortex_linear_decomposition(const MultiGraph& g, const Society& s, int rho) {
  if (!is_rho_vortex(g, s, rho))
    throw PreconditionError("society is not a " + id(rho) + "-vortex");
  MultiGraph h = materialize(g, s.graph);
  int n = static_cast<int>(s.boundary.size());
  LinearDecomposition d;
  if (n <= 1) {
    d.bags.push_back(h.vertices());
    return d;
  }
  // A_i is the source side of the cut between the first i boundary vertices
  // and the rest; D_i holds the vertices of A_i that no later bag needs.
  std::vector<VertexId> side, done;
  for (int i = 1; i <= n; ++i) {
    std::vector<VertexId> later = arc(s.boundary, i, n - i);
    std::sort(later.begin(), later.end());
    if (i < n) {
      VertexCut cut = leftmost_min_vertex_cut(h, arc(s.boundary, 0, i), later);
      std::vector<VertexId> next = cut.interior;
      next.insert(next.end(), cut.cut.begin(), cut.cut.end());
      next.insert(next.end(), side.begin(), side.end());
      side = sorted_ids(next);
    } else {
      side = h.vertices();
    }
    std::vector<VertexId> bag;
    std::set_difference(side.begin(), side.end(), done.begin(), done.end(), std::back_inserter(bag));
    d.bags.push_back(bag);
    done.clear();
    for (VertexId v : side) {
      if (contains(later, v)) continue;
      auto nb = h.neighbors(v);
      if (std::all_of(nb.begin(), nb.end(), [&](VertexId u) { return contains(side, u); }))
        done.push_back(v);
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::vector<VertexId> both;
      std::set_intersection(d.bags[i].begin(), d.bags[i].end(), d.bags[j].begin(), d.bags[j].end(),
                            std::back_inserter(both));
      d.adhesion = std::max(d.adhesion, static_cast<int>(both.size()));
    }
  return d;
}

CheckReport check_linear_decomposition(const MultiGraph& g, const Society& s,
                                       const LinearDecomposition& d) {
  validate_society(g, s);
  int n = static_cast<int>(s.boundary.size());
  int bags = static_cast<int>(d.bags.size());
  if (bags != std::max(n, 1))
    return CheckReport::fail("count", id(bags) + " bags for a boundary of " + id(n));
  std::vector<std::vector<VertexId>> sorted;
  for (const auto& b : d.bags) sorted.push_back(sorted_ids(b));
  for (int i = 0; i < n; ++i)
    if (!contains(sorted[i], s.boundary[i]))
      return CheckReport::fail("boundary", "bag " + id(i) + " misses boundary vertex " + id(s.boundary[i]));
  for (int i = 0; i < bags; ++i)
    if (!includes(s.graph.vertices, sorted[i]))
      return CheckReport::fail("vertex", "bag " + id(i) + " holds a vertex outside the society");
  std::map<VertexId, std::vector<int>> where;
  for (int i = 0; i < bags; ++i)
    for (VertexId v : sorted[i]) where[v].push_back(i);
  for (VertexId v : s.graph.vertices)
    if (!where.count(v)) return CheckReport::fail("vertex", "vertex " + id(v) + " is in no bag");
  for (EdgeId e : s.graph.edges) {
    const Edge& edge = g.edge(e);
    bool covered = std::any_of(sorted.begin(), sorted.end(), [&](const std::vector<VertexId>& b) {
      return contains(b, edge.u) && contains(b, edge.v);
    });
    if (!covered) return CheckReport::fail("edge", "no bag holds both ends of edge " + id(e));
  }
  for (const auto& [v, at] : where)
    if (at.back() - at.front() + 1 != static_cast<int>(at.size()))
      return CheckReport::fail("path", "bags holding vertex " + id(v) + " are not consecutive");
  for (int i = 0; i < bags; ++i)
    for (int j = i + 1; j < bags; ++j) {
      std::vector<VertexId> both;
      std::set_intersection(sorted[i].begin(), sorted[i].end(), sorted[j].begin(), sorted[j].end(),
                            std::back_inserter(both));
      if (static_cast<int>(both.size()) > d.adhesion)
        return CheckReport::fail("adhesion", "bags " + id(i) + " and " + id(j) + " share " +
                                                 id(static_cast<int>(both.size())) + " vertices");
    }
  return CheckReport::pass();
}

CheckReport is_segregation(const MultiGraph& g, const Segregation& seg) {
  for (size_t i = 0; i < seg.size(); ++i) {
    try {
      validate_society(g, seg[i]);
    } catch (const InputError& e) {
      return CheckReport::fail("society", "society " + id(static_cast<int>(i)) + ": " + e.what());
    }
  }
  SubgraphRef all;
  for (const Society& s : seg) all = unite(all, s.graph);
  if (!(all == whole(g))) return CheckReport::fail("cover", "the societies do not cover the graph");
  std::map<EdgeId, int> owner;
  for (size_t i = 0; i < seg.size(); ++i)
    for (EdgeId e : seg[i].graph.edges) {
      auto [it, fresh] = owner.emplace(e, static_cast<int>(i));
      if (!fresh)
        return CheckReport::fail("shared-edge", "societies " + id(it->second) + " and " +
                                                    id(static_cast<int>(i)) + " share edge " + id(e));
    }
  for (size_t i = 0; i < seg.size(); ++i)
    for (size_t j = i + 1; j < seg.size(); ++j) {
      std::vector<VertexId> both;
      const auto& a = seg[i].graph.vertices;
      const auto& b = seg[j].graph.vertices;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
      auto on = [](const Society& s, VertexId v) {
        return std::find(s.boundary.begin(), s.boundary.end(), v) != s.boundary.end();
      };
      for (VertexId v : both)
        if (!on(seg[i], v) || !on(seg[j], v))
          return CheckReport::fail("overlap", "societies " + id(static_cast<int>(i)) + " and " +
                                                  id(static_cast<int>(j)) + " share vertex " + id(v) +
                                                  " off a boundary");
    }
  return CheckReport::pass();
}

CentralityReport is_T_central(const MultiGraph& g, const Segregation& seg, const Tangle& t) {
  for (size_t i = 0; i < seg.size(); ++i) {
    validate_society(g, seg[i]);
    for (const Separation& m : t.members) {
      if (2 * m.order() > t.order) continue;
      if (includes(seg[i].graph.vertices, m.b.vertices) && includes(seg[i].graph.edges, m.b.edges)) {
        CentralityReport r;
        r.ok = false;
        r.society = static_cast<int>(i);
        r.witness = m;
        r.message = "a member of order " + id(m.order()) + " has its big side inside society " +
                    id(static_cast<int>(i));
        return r;
      }
    }
  }
  return {};
}

CheckReport is_rural_presentation(const MultiGraph& g, const Neighborhood& n, const RuralWitness& w) {
  MultiGraph h = witness_host(g, n, w);
  std::vector<Face> faces = trace_faces(w.embedding);
  int nf = static_cast<int>(faces.size());
  if (w.outer_face < 0 || w.outer_face >= nf || w.inner_face < 0 || w.inner_face >= nf)
    throw InputError("designated face out of range");
  if (!h.is_connected()) return CheckReport::fail("planar", "the drawn graph is not connected");
  if (euler_genus(w.embedding) != 0 || w.embedding.surface_genus.value_or(0) != 0)
    return CheckReport::fail("planar", "the drawing is not in the sphere");

  // The plane's rotational sense runs against the walk on the outer face and
  // with it on the inner face; either mirror image is acceptable.
  const auto& out_walk = faces[w.outer_face].vertices;
  const auto& in_walk = faces[w.inner_face].vertices;
  bool ok[2];
  bool outer_ok[2];
  for (int mirror = 0; mirror < 2; ++mirror) {
    auto outer = mirror ? n.outer : reversed(n.outer);
    auto inner = mirror ? reversed(n.inner) : n.inner;
    if (w.outer_face == w.inner_face) {
      outer_ok[mirror] = fits_cyclic(out_walk, outer);
      ok[mirror] = fits_apart(out_walk, outer, inner);
    } else {
      outer_ok[mirror] = fits_cyclic(out_walk, outer);
      ok[mirror] = outer_ok[mirror] && fits_cyclic(in_walk, inner);
    }
  }
  if (ok[0] || ok[1]) return CheckReport::pass();
  if (!outer_ok[0] && !outer_ok[1])
    return CheckReport::fail("outer", "Ω does not appear in order along the outer face");
  return CheckReport::fail("inner", w.outer_face == w.inner_face
                                        ? "Ω₀ and Ω cannot be placed apart along the shared face"
                                        : "Ω₀ does not appear along the inner face in Ω's sense");
}

CheckReport is_nest(const MultiGraph& g, const Neighborhood& n, const RuralWitness& w,
                    const std::vector<std::vector<EdgeId>>& cycles) {
  CheckReport rural = is_rural_presentation(g, n, w);
  if (!rural) return rural;
  const MultiGraph& h = w.embedding.host;
  std::vector<Face> faces = trace_faces(w.embedding);
  int nf = static_cast<int>(faces.size());
  std::vector<VertexId> used;
  std::vector<bool> prev(nf, false);
  for (size_t i = 0; i < cycles.size(); ++i) {
    std::string name = "cycle " + id(static_cast<int>(i));
    std::vector<VertexId> vs = cycle_vertices(h, cycles[i]);
    for (VertexId v : vs)
      if (contains(used, v)) return CheckReport::fail("disjoint", name + " meets an earlier cycle at " + id(v));
    used = sorted_ids([&] {
      auto all = used;
      all.insert(all.end(), vs.begin(), vs.end());
      return all;
    }());

    std::vector<EdgeId> on = cycles[i];
    std::sort(on.begin(), on.end());
    UnionFind uf(nf);
    std::map<EdgeId, int> seen;
    for (int f = 0; f < nf; ++f)
      for (EdgeId e : faces[f].edges) {
        if (contains(on, e)) continue;
        auto [it, fresh] = seen.emplace(e, f);
        if (!fresh) uf.unite(it->second, f);
      }
    int inside = uf.find(w.inner_face);
    if (inside == uf.find(w.outer_face))
      return CheckReport::fail("inner", name + " does not separate Δ₀ from the outer face");
    std::vector<bool> disk(nf);
    for (int f = 0; f < nf; ++f) disk[f] = uf.find(f) == inside;
    for (int f = 0; f < nf; ++f)
      if (prev[f] && !disk[f]) return CheckReport::fail("order", name + " does not enclose the cycle before it");
    prev = disk;
  }
  return CheckReport::pass();
}

PerpendicularReport is_perpendicular(const MultiGraph& g, const Neighborhood& n, const SubgraphRef& f,
                                     const std::vector<std::vector<EdgeId>>& nest, bool allow_empty) {
  validate_subgraph(g, f);
  validate_subgraph(g, n.graph);
  auto fail = [](std::string clause, std::string message) {
    PerpendicularReport r;
    r.ok = false;
    r.clause = std::move(clause);
    r.message = std::move(message);
    return r;
  };
  if (!includes(n.graph.vertices, f.vertices) || !includes(n.graph.edges, f.edges))
    return fail("ref", "f is not a subgraph of the neighborhood");
  MultiGraph h = materialize(g, n.graph);
  std::vector<std::vector<VertexId>> cyc_vertices;
  std::vector<std::vector<EdgeId>> cyc_edges;
  for (const auto& c : nest) {
    cyc_vertices.push_back(cycle_vertices(h, c));
    cyc_edges.push_back(c);
    std::sort(cyc_edges.back().begin(), cyc_edges.back().end());
  }
  auto in = [](const std::vector<VertexId>& list, VertexId v) {
    return std::find(list.begin(), list.end(), v) != list.end();
  };

  PerpendicularReport report;
  MultiGraph fg = materialize(g, f);
  auto comps = fg.components();
  for (size_t k = 0; k < comps.size(); ++k) {
    std::string name = "component " + id(static_cast<int>(k));
    const auto& vs = comps[k];
    std::vector<Edge> es;
    for (const Edge& e : fg.edges())
      if (contains(vs, e.u)) es.push_back(e);
    MultiGraph p(vs, es);
    if (p.edge_count() != p.vertex_count() - 1 || p.max_degree() > 2)
      return fail("path", name + " is not a path");
    std::vector<VertexId> ends;
    for (VertexId v : vs)
      if (p.degree(v) <= 1) ends.push_back(v);
    VertexId a = ends.front(), b = ends.back();
    if (!((in(n.outer, a) && in(n.inner, b)) || (in(n.outer, b) && in(n.inner, a))))
      return fail("ends", name + " does not run from Ω̄ to Ω̄₀");
    for (size_t i = 0; i < nest.size(); ++i) {
      std::vector<VertexId> mv;
      std::set_intersection(vs.begin(), vs.end(), cyc_vertices[i].begin(), cyc_vertices[i].end(),
                            std::back_inserter(mv));
      if (mv.empty()) {
        report.empty_meetings.emplace_back(static_cast<int>(k), static_cast<int>(i));
        if (!allow_empty) return fail("empty", name + " misses cycle " + id(static_cast<int>(i)));
        continue;
      }
      std::vector<Edge> me;
      for (const Edge& e : es)
        if (contains(cyc_edges[i], e.id)) me.push_back(e);
      MultiGraph m(mv, me);
      if (!m.is_connected() || m.edge_count() != m.vertex_count() - 1)
        return fail("meet", name + " meets cycle " + id(static_cast<int>(i)) + " in more than one path");
    }
  }
  return report;
}

Society compose(const MultiGraph& g, const Society& inner, const Neighborhood& n) {
  validate_society(g, inner);
  validate_subgraph(g, n.graph);
  if (!same_cyclic_order(n.inner, inner.boundary))
    throw InputError("inner boundary of the neighborhood differs from the society's boundary");
  return {unite(n.graph, inner.graph), n.outer};
}

}  // namespace tk
