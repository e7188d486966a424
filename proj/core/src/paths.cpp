#include "tanglekit/paths.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <tuple>

#include "split_flow.hpp"

namespace tk {
namespace detail {

SplitFlow::SplitFlow(const MultiGraph& g, std::span<const char> blocked) : g_(g) {
  blocked_.assign(g.vertex_count(), 0);
  for (std::size_t i = 0; i < blocked.size() && i < blocked_.size(); ++i) blocked_[i] = blocked[i];
  unbounded_.assign(g.vertex_count(), 0);
}

void SplitFlow::add_arc(int a, int b, int cap, EdgeId edge) {
  adj_[a].push_back({b, cap, static_cast<int>(adj_[b].size()), edge, cap});
  adj_[b].push_back({a, 0, static_cast<int>(adj_[a].size()) - 1, -1, 0});
}

void SplitFlow::build(std::span<const int> src, std::span<const int> dst) {
  const int n = g_.vertex_count();
  source_ = 2 * n;
  sink_ = 2 * n + 1;
  adj_.assign(2 * n + 2, {});
  const int wide = g_.edge_count() + n + 1;
  for (int vi = 0; vi < n; ++vi)
    if (!blocked_[vi]) add_arc(in_node(vi), out_node(vi), unbounded_[vi] ? wide : 1, -1);
  // Terminal arcs are wide so that every minimum cut consists of vertex arcs.
  // One arc per ordered neighbour pair, with the edge multiplicity as
  // capacity; the smallest parallel edge id names it.
  std::map<std::pair<int, int>, std::pair<EdgeId, int>> pairs;
  for (const Edge& e : g_.edges()) {
    if (e.is_loop()) continue;
    int a = g_.vertex_index(e.u), b = g_.vertex_index(e.v);
    if (blocked_[a] || blocked_[b]) continue;
    for (auto key : {std::pair{a, b}, std::pair{b, a}}) {
      auto [it, fresh] = pairs.emplace(key, std::pair{e.id, 0});
      it->second.first = std::min(it->second.first, e.id);
      ++it->second.second;
    }
  }
  for (const auto& [key, val] : pairs) add_arc(out_node(key.first), in_node(key.second), val.second, val.first);
  for (int vi : src)
    if (!blocked_[vi]) add_arc(source_, in_node(vi), wide, -1);
  for (int vi : dst)
    if (!blocked_[vi]) add_arc(out_node(vi), sink_, wide, -1);
}

bool SplitFlow::augment() {
  std::vector<std::pair<int, int>> parent(adj_.size(), {-1, -1});
  std::vector<char> seen(adj_.size(), 0);
  std::queue<int> q;
  q.push(source_);
  seen[source_] = 1;
  while (!q.empty() && !seen[sink_]) {
    int x = q.front();
    q.pop();
    for (int i = 0; i < static_cast<int>(adj_[x].size()); ++i) {
      const Arc& a = adj_[x][i];
      if (a.cap > 0 && !seen[a.to]) {
        seen[a.to] = 1;
        parent[a.to] = {x, i};
        q.push(a.to);
      }
    }
  }
  reach_ = seen;
  if (!seen[sink_]) return false;
  for (int y = sink_; y != source_;) {
    auto [x, i] = parent[y];
    Arc& a = adj_[x][i];
    a.cap -= 1;
    adj_[a.to][a.rev].cap += 1;
    y = x;
  }
  return true;
}

int SplitFlow::run(std::span<const int> src, std::span<const int> dst, int limit) {
  build(src, dst);
  int flow = 0;
  while (flow < limit && augment()) ++flow;
  return flow;
}

std::vector<Path> SplitFlow::paths() const {
  std::vector<std::vector<int>> flow(adj_.size());
  for (std::size_t x = 0; x < adj_.size(); ++x)
    for (const Arc& a : adj_[x]) flow[x].push_back(a.orig > 0 ? a.orig - a.cap : 0);
  // Takes one unit along the first arc out of x that still carries flow.
  auto step = [&](int x) {
    for (std::size_t i = 0; i < adj_[x].size(); ++i)
      if (flow[x][i] > 0) {
        --flow[x][i];
        return static_cast<int>(i);
      }
    return -1;
  };
  std::vector<Path> out;
  for (int first; (first = step(source_)) >= 0;) {
    Path p;
    int node = adj_[source_][first].to;
    while (true) {
      int vi = node / 2;
      // Cut out any cycle the flow happens to contain.
      auto seen = std::find(p.vertices.begin(), p.vertices.end(), g_.vertices()[vi]);
      if (seen != p.vertices.end()) {
        std::size_t keep = static_cast<std::size_t>(seen - p.vertices.begin());
        p.vertices.resize(keep);
        p.edges.resize(keep);
      }
      p.vertices.push_back(g_.vertices()[vi]);
      int i = step(node);  // in -> out
      int out_idx = adj_[node][i].to;
      int j = step(out_idx);
      const Arc& a = adj_[out_idx][j];
      if (a.to == sink_) break;
      p.edges.push_back(a.edge);
      node = a.to;
    }
    p.edges.resize(p.vertices.size() - 1);
    out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end(), [](const Path& a, const Path& b) {
    return std::tie(a.vertices.front(), a.vertices) < std::tie(b.vertices.front(), b.vertices);
  });
  return out;
}

}  // namespace detail

namespace {

std::vector<int> to_indices(const MultiGraph& g, std::span<const VertexId> xs) {
  std::vector<int> out;
  out.reserve(xs.size());
  for (VertexId v : xs) out.push_back(g.vertex_index(v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

DisjointPaths max_disjoint_paths(const MultiGraph& g, std::span<const VertexId> src,
                                 std::span<const VertexId> dst, std::span<const VertexId> avoid) {
  std::vector<char> blocked(g.vertex_count(), 0);
  for (int vi : to_indices(g, avoid)) blocked[vi] = 1;
  detail::SplitFlow flow(g, blocked);
  DisjointPaths out;
  out.count = flow.run(to_indices(g, src), to_indices(g, dst));
  out.paths = flow.paths();
  return out;
}

DisjointPaths max_internally_disjoint_paths(const MultiGraph& g, VertexId s, VertexId t) {
  const int si = g.vertex_index(s), ti = g.vertex_index(t);
  if (si == ti) throw PreconditionError("internally disjoint paths need distinct ends");
  detail::SplitFlow flow(g);
  flow.set_unbounded(si);
  flow.set_unbounded(ti);
  std::vector<int> src{si}, dst{ti};
  DisjointPaths out;
  out.count = flow.run(src, dst);
  out.paths = flow.paths();
  return out;
}

DisjointPaths max_fan(const MultiGraph& g, VertexId v, std::span<const VertexId> dst,
                      std::span<const VertexId> avoid, int limit) {
  const int vi = g.vertex_index(v);
  std::vector<int> targets = to_indices(g, dst);
  if (std::binary_search(targets.begin(), targets.end(), vi))
    throw PreconditionError("fan centre must not be a target");
  std::vector<char> blocked(g.vertex_count(), 0);
  for (int bi : to_indices(g, avoid)) blocked[bi] = 1;
  if (blocked[vi]) return {};
  detail::SplitFlow flow(g, blocked);
  flow.set_unbounded(vi);
  std::vector<int> src{vi};
  DisjointPaths out;
  out.count = flow.run(src, targets, limit);
  out.paths = flow.paths();
  return out;
}

int max_edge_disjoint_paths(const MultiGraph& g, VertexId s, VertexId t, int limit) {
  const int si = g.vertex_index(s), ti = g.vertex_index(t);
  if (si == ti) return limit;
  const int n = g.vertex_count();
  struct Arc {
    int to, cap, rev;
  };
  std::vector<std::vector<Arc>> adj(n);
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) continue;
    int a = g.vertex_index(e.u), b = g.vertex_index(e.v);
    adj[a].push_back({b, 1, static_cast<int>(adj[b].size())});
    adj[b].push_back({a, 1, static_cast<int>(adj[a].size()) - 1});
  }
  int flow = 0;
  while (flow < limit) {
    std::vector<std::pair<int, int>> parent(n, {-1, -1});
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(si);
    seen[si] = 1;
    while (!q.empty() && !seen[ti]) {
      int x = q.front();
      q.pop();
      for (int i = 0; i < static_cast<int>(adj[x].size()); ++i)
        if (adj[x][i].cap > 0 && !seen[adj[x][i].to]) {
          seen[adj[x][i].to] = 1;
          parent[adj[x][i].to] = {x, i};
          q.push(adj[x][i].to);
        }
    }
    if (!seen[ti]) break;
    for (int y = ti; y != si;) {
      auto [x, i] = parent[y];
      adj[x][i].cap -= 1;
      adj[y][adj[x][i].rev].cap += 1;
      y = x;
    }
    ++flow;
  }
  return flow;
}

VertexCut leftmost_min_vertex_cut(const MultiGraph& g, std::span<const VertexId> src,
                                  std::span<const VertexId> dst) {
  detail::SplitFlow flow(g);
  VertexCut out;
  out.size = flow.run(to_indices(g, src), to_indices(g, dst));
  for (int vi = 0; vi < g.vertex_count(); ++vi) {
    if (flow.out_reachable(vi))
      out.interior.push_back(g.vertices()[vi]);
    else if (flow.in_reachable(vi))
      out.cut.push_back(g.vertices()[vi]);
  }
  return out;
}

}  // namespace tk
