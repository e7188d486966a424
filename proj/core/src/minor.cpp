#include "tanglekit/minor.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace tk {

namespace {

std::string id(int x) { return std::to_string(x); }

/// Whether the vertices of `ref` are connected through the edges of `ref`.
bool connected_through(const MultiGraph& g, const SubgraphRef& ref) {
  if (ref.vertices.empty()) return false;
  std::vector<VertexId> seen{ref.vertices.front()};
  std::set<VertexId> reached{ref.vertices.front()};
  for (std::size_t i = 0; i < seen.size(); ++i)
    for (EdgeId e : ref.edges) {
      const Edge& ed = g.edge(e);
      VertexId other = ed.u == seen[i] ? ed.v : ed.v == seen[i] ? ed.u : -1;
      if (ed.u != seen[i] && ed.v != seen[i]) continue;
      if (reached.insert(other).second) seen.push_back(other);
    }
  return reached.size() == ref.vertices.size();
}

/// Pattern degree with loops counted twice.
std::vector<int> degrees(const MultiGraph& h) {
  std::vector<int> out(h.vertex_count());
  for (int vi = 0; vi < h.vertex_count(); ++vi) out[vi] = static_cast<int>(h.incident(vi).size());
  return out;
}

}  // namespace

CheckReport verify_minor(const MultiGraph& g, const MultiGraph& h, const MinorModel& m) {
  if (m.branch.size() != static_cast<std::size_t>(h.vertex_count()))
    return CheckReport::fail("domain", "every pattern vertex needs exactly one branch set");
  if (m.edge_image.size() != static_cast<std::size_t>(h.edge_count()))
    return CheckReport::fail("domain", "every pattern edge needs exactly one image");
  std::map<VertexId, VertexId> owner;
  for (const auto& [hv, set] : m.branch) {
    if (!h.has_vertex(hv)) return CheckReport::fail("domain", "unknown pattern vertex " + id(hv));
    try {
      validate_subgraph(g, set);
    } catch (const InputError& e) {
      return CheckReport::fail("branch-set", "branch set of " + id(hv) + ": " + e.what());
    }
    if (!connected_through(g, set))
      return CheckReport::fail("branch-set", "branch set of " + id(hv) + " is empty or disconnected");
    for (VertexId v : set.vertices)
      if (!owner.emplace(v, hv).second)
        return CheckReport::fail("disjoint", "branch sets of " + id(owner[v]) + " and " + id(hv) +
                                                 " share vertex " + id(v));
  }
  std::set<EdgeId> used;
  for (const auto& [f, e] : m.edge_image) {
    if (!h.has_edge(f)) return CheckReport::fail("domain", "unknown pattern edge " + id(f));
    if (!g.has_edge(e)) return CheckReport::fail("edge-image", "unknown host edge " + id(e));
    const Edge& pf = h.edge(f);
    const Edge& ge = g.edge(e);
    auto ou = owner.find(ge.u), ov = owner.find(ge.v);
    if (ou == owner.end() || ov == owner.end())
      return CheckReport::fail("edge-image", "image of " + id(f) + " leaves the branch sets");
    bool joins = (ou->second == pf.u && ov->second == pf.v) || (ou->second == pf.v && ov->second == pf.u);
    if (!joins) return CheckReport::fail("edge-image", "image of " + id(f) + " joins the wrong branch sets");
    if (pf.is_loop()) {
      const auto& inner = m.branch.at(pf.u).edges;
      if (std::binary_search(inner.begin(), inner.end(), e))
        return CheckReport::fail("edge-image", "loop image " + id(e) + " lies inside its branch set");
    }
    if (!used.insert(e).second)
      return CheckReport::fail("injective", "host edge " + id(e) + " is the image of two pattern edges");
  }
  return CheckReport::pass();
}

CheckReport verify_subdivision(const MultiGraph& g, const MultiGraph& h, const SubdivisionModel& m) {
  if (m.vertex_image.size() != static_cast<std::size_t>(h.vertex_count()))
    return CheckReport::fail("domain", "every pattern vertex needs exactly one image");
  if (m.edge_path.size() != static_cast<std::size_t>(h.edge_count()))
    return CheckReport::fail("domain", "every pattern edge needs exactly one path");
  std::set<VertexId> branch;
  for (const auto& [hv, gv] : m.vertex_image) {
    if (!h.has_vertex(hv)) return CheckReport::fail("domain", "unknown pattern vertex " + id(hv));
    if (!g.has_vertex(gv)) return CheckReport::fail("injective", "unknown host vertex " + id(gv));
    if (!branch.insert(gv).second)
      return CheckReport::fail("injective", "host vertex " + id(gv) + " is used twice");
  }
  std::map<VertexId, EdgeId> interior_owner;
  std::set<EdgeId> used_edges;
  std::vector<std::pair<EdgeId, const Path*>> paths;
  for (const auto& [f, p] : m.edge_path) {
    if (!h.has_edge(f)) return CheckReport::fail("domain", "unknown pattern edge " + id(f));
    const Edge& pf = h.edge(f);
    const std::size_t len = p.edges.size();
    if (p.vertices.size() != len + 1 || len == 0)
      return CheckReport::fail("path", "image of " + id(f) + " is not a walk with at least one edge");
    for (std::size_t i = 0; i < len; ++i) {
      if (!g.has_edge(p.edges[i])) return CheckReport::fail("path", "unknown host edge " + id(p.edges[i]));
      const Edge& ge = g.edge(p.edges[i]);
      bool fits = (ge.u == p.vertices[i] && ge.v == p.vertices[i + 1]) ||
                  (ge.v == p.vertices[i] && ge.u == p.vertices[i + 1]);
      if (!fits) return CheckReport::fail("path", "image of " + id(f) + " is not a walk");
      if (!used_edges.insert(p.edges[i]).second)
        return CheckReport::fail("disjoint", "host edge " + id(p.edges[i]) + " is used twice");
    }
    VertexId a = m.vertex_image.at(pf.u), b = m.vertex_image.at(pf.v);
    bool ends = (p.vertices.front() == a && p.vertices.back() == b) ||
                (p.vertices.front() == b && p.vertices.back() == a);
    if (!ends) return CheckReport::fail("path", "image of " + id(f) + " has the wrong ends");
    std::set<VertexId> distinct(p.vertices.begin(), p.vertices.end() - (pf.is_loop() ? 1 : 0));
    if (distinct.size() != p.vertices.size() - (pf.is_loop() ? 1 : 0))
      return CheckReport::fail("path", "image of " + id(f) + (pf.is_loop() ? " is not a cycle" : " is not a path"));
    for (std::size_t i = 1; i + 1 < p.vertices.size(); ++i) {
      VertexId v = p.vertices[i];
      if (branch.count(v))
        return CheckReport::fail("disjoint", "image of " + id(f) + " passes through branch vertex " + id(v));
      if (auto [it, fresh] = interior_owner.emplace(v, f); !fresh)
        return CheckReport::fail("disjoint", "images of " + id(it->second) + " and " + id(f) +
                                                 " share vertex " + id(v));
    }
  }
  return CheckReport::pass();
}

MinorModel identity_minor(const MultiGraph& g) {
  MinorModel m;
  for (VertexId v : g.vertices()) m.branch[v] = {{v}, {}};
  for (const Edge& e : g.edges()) m.edge_image[e.id] = e.id;
  return m;
}

SubdivisionModel identity_subdivision(const MultiGraph& g) {
  SubdivisionModel m;
  for (VertexId v : g.vertices()) m.vertex_image[v] = v;
  for (const Edge& e : g.edges()) m.edge_path[e.id] = {{e.u, e.v}, {e.id}};
  return m;
}

namespace {

/// Label search for minors: each host vertex joins one branch set or stays
/// unused, visited in BFS order so that branch sets close early.
class MinorSearch {
 public:
  MinorSearch(const MultiGraph& g, const MultiGraph& h) : g_(g), h_(h), k_(h.vertex_count()) {
    const int n = g.vertex_count();
    std::vector<int> hdeg = degrees(h);
    int hmin = hdeg.empty() ? 0 : *std::min_element(hdeg.begin(), hdeg.end());
    alive_.assign(n, 1);
    // Vertices too poor to matter: isolated ones, and leaves when every
    // pattern vertex needs two edge ends.
    std::vector<int> deg(n);
    for (int vi = 0; vi < n; ++vi) deg[vi] = static_cast<int>(g.incident(vi).size());
    int drop_below = hmin >= 2 ? 2 : hmin >= 1 ? 1 : 0;
    for (bool changed = true; changed;) {
      changed = false;
      for (int vi = 0; vi < n; ++vi)
        if (alive_[vi] && deg[vi] < drop_below) {
          alive_[vi] = 0;
          changed = true;
          for (int ei : g.incident(vi)) {
            const Edge& e = g.edges()[ei];
            if (e.is_loop()) continue;
            int w = g.vertex_index(e.other(g.vertices()[vi]));
            --deg[w];
          }
          deg[vi] = 0;
        }
    }
    nbrs_.assign(n, {});
    for (int vi = 0; vi < n; ++vi)
      for (VertexId w : g.neighbors(g.vertices()[vi])) {
        int wi = g.vertex_index(w);
        if (alive_[vi] && alive_[wi]) nbrs_[vi].push_back(wi);
      }
    std::vector<char> seen(n, 0);
    for (int s = 0; s < n; ++s) {
      if (!alive_[s] || seen[s]) continue;
      seen[s] = 1;
      order_.push_back(s);
      for (std::size_t i = order_.size() - 1; i < order_.size(); ++i)
        for (int w : nbrs_[order_[i]])
          if (!seen[w]) {
            seen[w] = 1;
            order_.push_back(w);
          }
    }
    position_.assign(n, -1);
    for (std::size_t i = 0; i < order_.size(); ++i) position_[order_[i]] = static_cast<int>(i);
    label_.assign(n, -1);
    pattern_pairs_.assign(k_, std::vector<int>(k_, 0));
    for (const Edge& e : h.edges()) {
      int a = h.vertex_index(e.u), b = h.vertex_index(e.v);
      ++pattern_pairs_[a][b];
      if (a != b) ++pattern_pairs_[b][a];
    }
  }

  std::optional<MinorModel> run() {
    if (k_ == 0) return MinorModel{};
    if (static_cast<int>(order_.size()) < k_) return std::nullopt;
    if (dfs(0)) return build();
    return std::nullopt;
  }

 private:
  bool dfs(std::size_t pos) {
    if (pos == order_.size()) return complete();
    int unused_labels = 0;
    for (int b = 0; b < k_; ++b) unused_labels += counts_[b] == 0;
    if (unused_labels > static_cast<int>(order_.size() - pos)) return false;
    int v = order_[pos];
    for (int b = -1; b < k_; ++b) {
      label_[v] = b;
      if (b >= 0) ++counts_[b];
      bool ok = b < 0 || viable(b, pos);
      if (ok && b >= 0) ok = viable_others(pos);
      if (ok && dfs(pos + 1)) return true;
      if (b >= 0) --counts_[b];
    }
    label_[v] = -1;
    return false;
  }

  /// A branch set with a component that can no longer grow must be that
  /// component alone.
  bool viable(int b, std::size_t pos) const { return closed_ok(b, pos); }

  bool viable_others(std::size_t pos) const {
    // Assigning the current vertex can close off components of neighbouring
    // labels; only those need rechecking.
    int v = order_[pos];
    for (int w : nbrs_[v])
      if (position_[w] <= static_cast<int>(pos) && label_[w] >= 0 && label_[w] != label_[v] &&
          !closed_ok(label_[w], pos))
        return false;
    if (label_[v] < 0)
      for (int w : nbrs_[v])
        if (position_[w] <= static_cast<int>(pos) && label_[w] >= 0 && !closed_ok(label_[w], pos))
          return false;
    return true;
  }

  bool closed_ok(int b, std::size_t pos) const {
    std::vector<int> members;
    for (std::size_t i = 0; i <= pos; ++i)
      if (label_[order_[i]] == b) members.push_back(order_[i]);
    if (members.size() <= 1) return true;
    std::vector<int> comp(g_.vertex_count(), -1);
    int ncomp = 0;
    bool some_closed = false;
    for (int s : members) {
      if (comp[s] >= 0) continue;
      bool can_grow = false;
      std::vector<int> stack{s};
      comp[s] = ncomp;
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int w : nbrs_[x]) {
          if (position_[w] > static_cast<int>(pos)) {
            can_grow = true;
          } else if (label_[w] == b && comp[w] < 0) {
            comp[w] = ncomp;
            stack.push_back(w);
          }
        }
      }
      some_closed = some_closed || !can_grow;
      ++ncomp;
    }
    return ncomp == 1 || !some_closed;
  }

  bool complete() {
    for (int b = 0; b < k_; ++b)
      if (counts_[b] == 0 || !closed_ok(b, order_.size() - 1)) return false;
    std::vector<std::vector<int>> between(k_, std::vector<int>(k_, 0));
    for (const Edge& e : g_.edges()) {
      int a = label_[g_.vertex_index(e.u)], b = label_[g_.vertex_index(e.v)];
      if (a < 0 || b < 0) continue;
      ++between[a][b];
      if (a != b) ++between[b][a];
    }
    for (int a = 0; a < k_; ++a)
      for (int b = a; b < k_; ++b) {
        int have = a == b ? between[a][a] - (counts_[a] - 1) : between[a][b];
        if (have < pattern_pairs_[a][b]) return false;
      }
    return true;
  }

  MinorModel build() const {
    MinorModel m;
    std::set<EdgeId> tree_edges;
    for (int b = 0; b < k_; ++b) {
      SubgraphRef set;
      int root = -1;
      for (int vi : order_)
        if (label_[vi] == b) {
          root = vi;
          break;
        }
      std::vector<int> queue{root};
      std::vector<char> seen(g_.vertex_count(), 0);
      seen[root] = 1;
      for (std::size_t i = 0; i < queue.size(); ++i) {
        int x = queue[i];
        set.vertices.push_back(g_.vertices()[x]);
        for (int ei : g_.incident(x)) {
          const Edge& e = g_.edges()[ei];
          int w = g_.vertex_index(e.other(g_.vertices()[x]));
          if (label_[w] == b && !seen[w]) {
            seen[w] = 1;
            queue.push_back(w);
            set.edges.push_back(e.id);
            tree_edges.insert(e.id);
          }
        }
      }
      std::sort(set.vertices.begin(), set.vertices.end());
      std::sort(set.edges.begin(), set.edges.end());
      m.branch[h_.vertices()[b]] = std::move(set);
    }
    std::set<EdgeId> taken;
    for (const Edge& f : h_.edges()) {
      int a = h_.vertex_index(f.u), b = h_.vertex_index(f.v);
      for (const Edge& e : g_.edges()) {
        if (taken.count(e.id) || tree_edges.count(e.id)) continue;
        int x = label_[g_.vertex_index(e.u)], y = label_[g_.vertex_index(e.v)];
        if ((x == a && y == b) || (x == b && y == a)) {
          m.edge_image[f.id] = e.id;
          taken.insert(e.id);
          break;
        }
      }
    }
    return m;
  }

  const MultiGraph& g_;
  const MultiGraph& h_;
  int k_;
  std::vector<char> alive_;
  std::vector<std::vector<int>> nbrs_;
  std::vector<int> order_;
  std::vector<int> position_;
  std::vector<int> label_;
  std::vector<int> counts_ = std::vector<int>(k_, 0);
  std::vector<std::vector<int>> pattern_pairs_;
};

/// Branch-vertex placement followed by backtracking path routing.
class SubdivisionSearch {
 public:
  SubdivisionSearch(const MultiGraph& g, const MultiGraph& h) : g_(g), h_(h) {
    hdeg_ = degrees(h);
    for (int vi = 0; vi < h.vertex_count(); ++vi) pattern_order_.push_back(vi);
    std::stable_sort(pattern_order_.begin(), pattern_order_.end(),
                     [&](int a, int b) { return hdeg_[a] > hdeg_[b]; });
    image_.assign(h.vertex_count(), -1);
    owner_.assign(g.vertex_count(), kFree);
    edge_used_.assign(g.edge_count(), 0);
    for (const Edge& e : h.edges()) pattern_edges_.push_back(e);
  }

  std::optional<SubdivisionModel> run() {
    if (h_.vertex_count() > g_.vertex_count()) return std::nullopt;
    std::vector<int> hd = hdeg_, gd(g_.vertex_count());
    for (int vi = 0; vi < g_.vertex_count(); ++vi) gd[vi] = static_cast<int>(g_.incident(vi).size());
    std::sort(hd.rbegin(), hd.rend());
    std::sort(gd.rbegin(), gd.rend());
    for (std::size_t i = 0; i < hd.size(); ++i)
      if (hd[i] > gd[i]) return std::nullopt;
    if (place(0)) return model_;
    return std::nullopt;
  }

 private:
  static constexpr int kFree = -1;
  static constexpr int kBranch = -2;

  bool place(std::size_t i) {
    if (i == pattern_order_.size()) {
      demand_.assign(g_.vertex_count(), 0);
      for (int hv = 0; hv < h_.vertex_count(); ++hv) demand_[image_[hv]] = hdeg_[hv];
      paths_.assign(pattern_edges_.size(), {});
      return route(0);
    }
    int hv = pattern_order_[i];
    for (int gv = 0; gv < g_.vertex_count(); ++gv) {
      if (owner_[gv] != kFree || static_cast<int>(g_.incident(gv).size()) < hdeg_[hv]) continue;
      owner_[gv] = kBranch;
      image_[hv] = gv;
      if (place(i + 1)) return true;
      owner_[gv] = kFree;
      image_[hv] = -1;
    }
    return false;
  }

  /// Each branch vertex needs as many usable edge ends as unrouted pattern
  /// edge ends.
  bool supply_ok() const {
    for (int hv = 0; hv < h_.vertex_count(); ++hv) {
      int b = image_[hv];
      if (demand_[b] == 0) continue;
      int supply = 0;
      for (int ei : g_.incident(b)) {
        if (edge_used_[ei]) continue;
        const Edge& e = g_.edges()[ei];
        int w = g_.vertex_index(e.other(g_.vertices()[b]));
        if (owner_[w] == kFree || owner_[w] == kBranch) ++supply;
      }
      if (supply < demand_[b]) return false;
    }
    return true;
  }

  bool route(std::size_t k) {
    if (k == pattern_edges_.size()) {
      finish();
      return true;
    }
    if (!supply_ok()) return false;
    const Edge& f = pattern_edges_[k];
    int s = image_[h_.vertex_index(f.u)], t = image_[h_.vertex_index(f.v)];
    std::vector<int> verts{s};
    std::vector<int> edges;
    --demand_[s];
    --demand_[t];
    bool ok = extend(k, s, t, verts, edges);
    ++demand_[s];
    ++demand_[t];
    return ok;
  }

  bool extend(std::size_t k, int at, int target, std::vector<int>& verts, std::vector<int>& edges) {
    for (int ei : g_.incident(at)) {
      if (edge_used_[ei]) continue;
      const Edge& e = g_.edges()[ei];
      int w = g_.vertex_index(e.other(g_.vertices()[at]));
      if (w == target) {
        edge_used_[ei] = 1;
        verts.push_back(w);
        edges.push_back(ei);
        paths_[k] = {verts, edges};
        if (route(k + 1)) return true;
        verts.pop_back();
        edges.pop_back();
        edge_used_[ei] = 0;
        continue;
      }
      if (owner_[w] != kFree) continue;
      owner_[w] = static_cast<int>(k);
      edge_used_[ei] = 1;
      verts.push_back(w);
      edges.push_back(ei);
      if (extend(k, w, target, verts, edges)) return true;
      verts.pop_back();
      edges.pop_back();
      edge_used_[ei] = 0;
      owner_[w] = kFree;
    }
    return false;
  }

  void finish() {
    for (int hv = 0; hv < h_.vertex_count(); ++hv)
      model_.vertex_image[h_.vertices()[hv]] = g_.vertices()[image_[hv]];
    for (std::size_t k = 0; k < pattern_edges_.size(); ++k) {
      Path p;
      for (int vi : paths_[k].first) p.vertices.push_back(g_.vertices()[vi]);
      for (int ei : paths_[k].second) p.edges.push_back(g_.edges()[ei].id);
      model_.edge_path[pattern_edges_[k].id] = std::move(p);
    }
  }

  const MultiGraph& g_;
  const MultiGraph& h_;
  std::vector<int> hdeg_;
  std::vector<int> pattern_order_;
  std::vector<Edge> pattern_edges_;
  std::vector<int> image_;
  std::vector<int> owner_;  // kFree, kBranch, or index of the pattern edge routed through
  std::vector<char> edge_used_;
  std::vector<int> demand_;
  std::vector<std::pair<std::vector<int>, std::vector<int>>> paths_;
  SubdivisionModel model_;
};

}  // namespace

std::optional<MinorModel> find_minor(const MultiGraph& g, const MultiGraph& h, const Guards& guards) {
  if (!guards.override_vertex_caps && g.vertex_count() > guards.max_minor_vertices)
    throw GuardError("minor search capped at " + std::to_string(guards.max_minor_vertices) + " host vertices");
  if (h.edge_count() > g.edge_count()) return std::nullopt;
  return MinorSearch(g, h).run();
}

std::optional<SubdivisionModel> find_subdivision(const MultiGraph& g, const MultiGraph& h,
                                                 const Guards& guards) {
  if (!guards.override_vertex_caps && g.vertex_count() > guards.max_subdivision_vertices)
    throw GuardError("subdivision search capped at " + std::to_string(guards.max_subdivision_vertices) +
                     " host vertices");
  if (h.edge_count() > g.edge_count()) return std::nullopt;
  return SubdivisionSearch(g, h).run();
}

}  // namespace tk
