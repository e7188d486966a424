#include "tanglekit/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace tk {

namespace {

template <typename T>
bool sorted_unique(const std::vector<T>& xs) {
  return std::adjacent_find(xs.begin(), xs.end(), [](const T& a, const T& b) { return !(a < b); }) ==
         xs.end();
}

std::vector<VertexId> sorted_set(std::span<const VertexId> xs) {
  std::vector<VertexId> out(xs.begin(), xs.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

MultiGraph::MultiGraph(std::vector<VertexId> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (!sorted_unique(vertices_)) throw InputError("duplicate vertex id");
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < edges_.size(); ++i)
    if (edges_[i - 1].id == edges_[i].id)
      throw InputError("duplicate edge id " + std::to_string(edges_[i].id));
  incidence_.assign(vertices_.size(), {});
  for (int ei = 0; ei < edge_count(); ++ei) {
    const Edge& e = edges_[ei];
    if (!has_vertex(e.u) || !has_vertex(e.v))
      throw InputError("edge " + std::to_string(e.id) + " has an endpoint outside the vertex set");
    incidence_[vertex_index(e.u)].push_back(ei);
    incidence_[vertex_index(e.v)].push_back(ei);
  }
}

MultiGraph MultiGraph::from_edge_pairs(int n, std::span<const std::pair<VertexId, VertexId>> pairs) {
  std::vector<VertexId> vs(n);
  std::iota(vs.begin(), vs.end(), 0);
  std::vector<Edge> es;
  es.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i)
    es.push_back({static_cast<EdgeId>(i), pairs[i].first, pairs[i].second});
  return MultiGraph(std::move(vs), std::move(es));
}

bool MultiGraph::has_vertex(VertexId v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool MultiGraph::has_edge(EdgeId e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e,
                             [](const Edge& x, EdgeId id) { return x.id < id; });
  return it != edges_.end() && it->id == e;
}

int MultiGraph::vertex_index(VertexId v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) throw InputError("unknown vertex id " + std::to_string(v));
  return static_cast<int>(it - vertices_.begin());
}

int MultiGraph::edge_index(EdgeId e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e,
                             [](const Edge& x, EdgeId id) { return x.id < id; });
  if (it == edges_.end() || it->id != e) throw InputError("unknown edge id " + std::to_string(e));
  return static_cast<int>(it - edges_.begin());
}

std::vector<VertexId> MultiGraph::neighbors(VertexId v) const {
  std::vector<VertexId> out;
  for (int ei : incident(vertex_index(v))) {
    VertexId w = edges_[ei].other(v);
    if (w != v) out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int MultiGraph::max_degree() const {
  int best = 0;
  for (const auto& inc : incidence_) best = std::max(best, static_cast<int>(inc.size()));
  return best;
}

std::vector<std::vector<VertexId>> MultiGraph::components() const {
  std::vector<int> comp(vertices_.size(), -1);
  std::vector<std::vector<VertexId>> out;
  for (int s = 0; s < vertex_count(); ++s) {
    if (comp[s] >= 0) continue;
    int c = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<int> stack{s};
    comp[s] = c;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      out[c].push_back(vertices_[x]);
      for (int ei : incidence_[x]) {
        int y = vertex_index(edges_[ei].other(vertices_[x]));
        if (comp[y] < 0) {
          comp[y] = c;
          stack.push_back(y);
        }
      }
    }
    std::sort(out[c].begin(), out[c].end());
  }
  return out;
}

bool MultiGraph::is_connected() const { return components().size() == 1; }

SubgraphRef induced_subgraph(const MultiGraph& g, std::span<const VertexId> xs) {
  SubgraphRef out;
  out.vertices = sorted_set(xs);
  std::vector<char> in(g.vertex_count(), 0);
  for (VertexId v : out.vertices) in[g.vertex_index(v)] = 1;
  for (const Edge& e : g.edges())
    if (in[g.vertex_index(e.u)] && in[g.vertex_index(e.v)]) out.edges.push_back(e.id);
  return out;
}

void validate_subgraph(const MultiGraph& g, const SubgraphRef& ref) {
  if (!sorted_unique(ref.vertices) || !sorted_unique(ref.edges))
    throw InputError("subgraph id lists must be sorted and duplicate-free");
  for (VertexId v : ref.vertices)
    if (!g.has_vertex(v)) throw InputError("unknown vertex id " + std::to_string(v));
  for (EdgeId e : ref.edges) {
    const Edge& ed = g.edge(e);
    if (!std::binary_search(ref.vertices.begin(), ref.vertices.end(), ed.u) ||
        !std::binary_search(ref.vertices.begin(), ref.vertices.end(), ed.v))
      throw InputError("subgraph edge " + std::to_string(e) + " has an endpoint outside the subgraph");
  }
}

MultiGraph materialize(const MultiGraph& g, const SubgraphRef& ref) {
  validate_subgraph(g, ref);
  std::vector<Edge> es;
  es.reserve(ref.edges.size());
  for (EdgeId e : ref.edges) es.push_back(g.edge(e));
  return MultiGraph(ref.vertices, std::move(es));
}

SubgraphRef whole(const MultiGraph& g) {
  SubgraphRef out;
  out.vertices = g.vertices();
  for (const Edge& e : g.edges()) out.edges.push_back(e.id);
  return out;
}

MultiGraph delete_vertices(const MultiGraph& g, std::span<const VertexId> zs) {
  std::vector<VertexId> z = sorted_set(zs);
  for (VertexId v : z) (void)g.vertex_index(v);
  auto gone = [&](VertexId v) { return std::binary_search(z.begin(), z.end(), v); };
  std::vector<VertexId> vs;
  for (VertexId v : g.vertices())
    if (!gone(v)) vs.push_back(v);
  std::vector<Edge> es;
  for (const Edge& e : g.edges())
    if (!gone(e.u) && !gone(e.v)) es.push_back(e);
  return MultiGraph(std::move(vs), std::move(es));
}

MultiGraph delete_edges(const MultiGraph& g, std::span<const EdgeId> es) {
  std::vector<int> drop(g.edge_count(), 0);
  for (EdgeId e : es) drop[g.edge_index(e)] = 1;
  std::vector<Edge> keep;
  for (int i = 0; i < g.edge_count(); ++i)
    if (!drop[i]) keep.push_back(g.edges()[i]);
  return MultiGraph(g.vertices(), std::move(keep));
}

SubgraphRef unite(const SubgraphRef& a, const SubgraphRef& b) {
  SubgraphRef out;
  std::set_union(a.vertices.begin(), a.vertices.end(), b.vertices.begin(), b.vertices.end(),
                 std::back_inserter(out.vertices));
  std::set_union(a.edges.begin(), a.edges.end(), b.edges.begin(), b.edges.end(),
                 std::back_inserter(out.edges));
  return out;
}

MultiGraph contract_edge(const MultiGraph& g, EdgeId e) {
  const Edge target = g.edge(e);
  if (target.is_loop()) {
    EdgeId drop[] = {e};
    return delete_edges(g, drop);
  }
  VertexId keep = std::min(target.u, target.v);
  VertexId gone = std::max(target.u, target.v);
  std::vector<VertexId> vs;
  for (VertexId v : g.vertices())
    if (v != gone) vs.push_back(v);
  std::vector<Edge> es;
  for (const Edge& x : g.edges()) {
    if (x.id == e) continue;
    Edge y = x;
    if (y.u == gone) y.u = keep;
    if (y.v == gone) y.v = keep;
    es.push_back(y);
  }
  return MultiGraph(std::move(vs), std::move(es));
}

MultiGraph complete_graph(int n) {
  std::vector<std::pair<VertexId, VertexId>> ps;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) ps.emplace_back(i, j);
  return MultiGraph::from_edge_pairs(n, ps);
}

MultiGraph cycle_graph(int n) {
  std::vector<std::pair<VertexId, VertexId>> ps;
  for (int i = 0; i < n; ++i) ps.emplace_back(i, (i + 1) % n);
  return MultiGraph::from_edge_pairs(n, ps);
}

MultiGraph path_graph(int n) {
  std::vector<std::pair<VertexId, VertexId>> ps;
  for (int i = 0; i + 1 < n; ++i) ps.emplace_back(i, i + 1);
  return MultiGraph::from_edge_pairs(n, ps);
}

MultiGraph grid_graph(int rows, int cols) {
  std::vector<std::pair<VertexId, VertexId>> ps;
  auto id = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) ps.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) ps.emplace_back(id(r, c), id(r + 1, c));
    }
  return MultiGraph::from_edge_pairs(rows * cols, ps);
}

MultiGraph complete_bipartite(int a, int b) {
  std::vector<std::pair<VertexId, VertexId>> ps;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) ps.emplace_back(i, a + j);
  return MultiGraph::from_edge_pairs(a + b, ps);
}

MultiGraph petersen_graph() {
  std::vector<std::pair<VertexId, VertexId>> ps;
  for (int i = 0; i < 5; ++i) {
    ps.emplace_back(i, (i + 1) % 5);
    ps.emplace_back(i, i + 5);
    ps.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return MultiGraph::from_edge_pairs(10, ps);
}

MultiGraph star_graph(int leaves) {
  std::vector<std::pair<VertexId, VertexId>> ps;
  for (int i = 1; i <= leaves; ++i) ps.emplace_back(0, i);
  return MultiGraph::from_edge_pairs(leaves + 1, ps);
}

MultiGraph subdivide_all(const MultiGraph& g) {
  VertexId next = g.vertices().empty() ? 0 : g.vertices().back() + 1;
  std::vector<VertexId> vs = g.vertices();
  std::vector<Edge> es;
  EdgeId eid = 0;
  for (const Edge& e : g.edges()) {
    VertexId mid = next++;
    vs.push_back(mid);
    es.push_back({eid++, e.u, mid});
    es.push_back({eid++, mid, e.v});
  }
  return MultiGraph(std::move(vs), std::move(es));
}

MultiGraph relabel(const MultiGraph& g, std::span<const VertexId> perm) {
  if (static_cast<int>(perm.size()) != g.vertex_count()) throw InputError("relabel: wrong permutation size");
  std::vector<VertexId> vs(perm.begin(), perm.end());
  std::vector<Edge> es;
  for (const Edge& e : g.edges())
    es.push_back({e.id, perm[g.vertex_index(e.u)], perm[g.vertex_index(e.v)]});
  return MultiGraph(std::move(vs), std::move(es));
}

MultiGraph disjoint_union(const MultiGraph& a, const MultiGraph& b) {
  VertexId vshift = a.vertices().empty() ? 0 : a.vertices().back() + 1;
  EdgeId eshift = a.edges().empty() ? 0 : a.edges().back().id + 1;
  std::vector<VertexId> vs = a.vertices();
  std::vector<Edge> es = a.edges();
  for (VertexId v : b.vertices()) vs.push_back(v + vshift);
  for (const Edge& e : b.edges()) es.push_back({e.id + eshift, e.u + vshift, e.v + vshift});
  return MultiGraph(std::move(vs), std::move(es));
}

}  // namespace tk
