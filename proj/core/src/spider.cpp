#include "tanglekit/spider.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "id_sets.hpp"
#include "tanglekit/paths.hpp"

namespace tk {

namespace {

using detail::check_vertices;
using detail::contains;
using detail::sorted_ids;

void check_spider_args(int d, int h) {
  if (d < 1) throw PreconditionError("spiders need d >= 1");
  if (h < 0) throw PreconditionError("packing size must be non-negative");
}

void check_disjoint(const std::vector<VertexId>& x, const std::vector<VertexId>& y) {
  for (VertexId v : x)
    if (contains(y, v)) throw PreconditionError("head and leaf sets must be disjoint");
}

void check_size(const MultiGraph& g, const Guards& guards) {
  if (!guards.override_vertex_caps && g.vertex_count() > guards.max_spider_vertices)
    throw GuardError("spider search is capped at " + std::to_string(guards.max_spider_vertices) +
                     " vertices");
}

/// Degree of each tree vertex, counting only tree edges.
std::map<VertexId, int> tree_degrees(const MultiGraph& g, const SubgraphRef& tree) {
  std::map<VertexId, int> deg;
  for (VertexId v : tree.vertices) deg[v] = 0;
  for (EdgeId e : tree.edges) {
    ++deg[g.edge(e).u];
    ++deg[g.edge(e).v];
  }
  return deg;
}

Spider assemble(const MultiGraph& g, VertexId head, const std::vector<Path>& paths) {
  Spider s;
  s.head = head;
  s.tree.vertices.push_back(head);
  for (const Path& p : paths) {
    s.tree.vertices.insert(s.tree.vertices.end(), p.vertices.begin(), p.vertices.end());
    s.tree.edges.insert(s.tree.edges.end(), p.edges.begin(), p.edges.end());
  }
  s.tree.vertices = sorted_ids(s.tree.vertices);
  std::sort(s.tree.edges.begin(), s.tree.edges.end());
  for (auto [v, k] : tree_degrees(g, s.tree))
    if (k == 1) s.leaves.push_back(v);
  return s;
}

/// One spider per head, all disjoint. Each head is replaced by d port
/// vertices joined to its other neighbours, so d*|heads| fully disjoint
/// port-to-y paths are exactly d paths per head that never pass through a
/// head.
std::optional<std::vector<Spider>> pack_heads(const MultiGraph& g, const std::vector<VertexId>& heads,
                                              const std::vector<VertexId>& y, int d) {
  const int ports = d * static_cast<int>(heads.size());
  const VertexId base = g.vertices().empty() ? 0 : g.vertices().back() + 1;
  std::vector<VertexId> vs;
  for (VertexId v : g.vertices())
    if (!contains(heads, v)) vs.push_back(v);
  std::vector<VertexId> port_ids;
  for (int k = 0; k < ports; ++k) port_ids.push_back(base + k);
  vs.insert(vs.end(), port_ids.begin(), port_ids.end());

  std::vector<Edge> es;
  std::vector<EdgeId> original;
  auto add = [&](VertexId u, VertexId v, EdgeId orig) {
    es.push_back({static_cast<EdgeId>(es.size()), u, v});
    original.push_back(orig);
  };
  for (const Edge& e : g.edges()) {
    bool hu = contains(heads, e.u), hv = contains(heads, e.v);
    if (e.is_loop() || (hu && hv)) continue;
    if (!hu && !hv) {
      add(e.u, e.v, e.id);
      continue;
    }
    VertexId head = hu ? e.u : e.v, other = hu ? e.v : e.u;
    int i = static_cast<int>(std::lower_bound(heads.begin(), heads.end(), head) - heads.begin());
    for (int k = 0; k < d; ++k) add(base + i * d + k, other, e.id);
  }
  MultiGraph split(std::move(vs), std::move(es));
  DisjointPaths found = max_disjoint_paths(split, port_ids, y);
  if (found.count < ports) return std::nullopt;

  std::vector<std::vector<Path>> per_head(heads.size());
  for (Path& p : found.paths) {
    if (p.vertices.front() < base) {
      std::reverse(p.vertices.begin(), p.vertices.end());
      std::reverse(p.edges.begin(), p.edges.end());
    }
    int i = (p.vertices.front() - base) / d;
    p.vertices.front() = heads[i];
    for (EdgeId& e : p.edges) e = original[e];
    per_head[i].push_back(std::move(p));
  }
  std::vector<Spider> out;
  for (std::size_t i = 0; i < heads.size(); ++i) out.push_back(assemble(g, heads[i], per_head[i]));
  return out;
}

template <class F>
bool for_each_subset(int n, int size, F&& visit) {
  std::vector<int> pick(size);
  for (int i = 0; i < size; ++i) pick[i] = i;
  if (size > n) return false;
  while (true) {
    if (visit(pick)) return true;
    int i = size - 1;
    while (i >= 0 && pick[i] == n - size + i) --i;
    if (i < 0) return false;
    ++pick[i];
    for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

CheckReport is_spider(const MultiGraph& g, const Spider& s, int d, std::span<const VertexId> from,
                      std::span<const VertexId> to) {
  validate_subgraph(g, s.tree);
  if (!g.has_vertex(s.head)) throw InputError("unknown vertex id " + std::to_string(s.head));
  for (EdgeId e : s.tree.edges)
    if (g.edge(e).is_loop()) return CheckReport::fail("tree", "tree contains loop " + std::to_string(e));
  if (s.tree.vertices.empty() || s.tree.edges.size() + 1 != s.tree.vertices.size() ||
      !materialize(g, s.tree).is_connected())
    return CheckReport::fail("tree", "spider is not a tree");
  if (!contains(s.tree.vertices, s.head)) return CheckReport::fail("head", "head is not in the tree");
  std::vector<VertexId> leaves;
  for (auto [v, k] : tree_degrees(g, s.tree)) {
    if (v == s.head && k != d)
      return CheckReport::fail("degree", "head has degree " + std::to_string(k) + ", expected " +
                                             std::to_string(d));
    if (v != s.head && k > 2)
      return CheckReport::fail("degree", "vertex " + std::to_string(v) + " has degree " + std::to_string(k));
    if (k == 1) leaves.push_back(v);
  }
  if (leaves != s.leaves) return CheckReport::fail("leaves", "leaf list does not match the tree");
  std::vector<VertexId> fs = sorted_ids(from), ts = sorted_ids(to);
  if (!contains(fs, s.head)) return CheckReport::fail("from", "head is outside the head set");
  for (VertexId v : leaves)
    if (!contains(ts, v)) return CheckReport::fail("to", "leaf " + std::to_string(v) + " is outside the target set");
  return CheckReport::pass();
}

CheckReport verify_spider_packing(const MultiGraph& g, std::span<const Spider> spiders, int d,
                                  std::span<const VertexId> from, std::span<const VertexId> to) {
  std::vector<VertexId> used;
  for (std::size_t i = 0; i < spiders.size(); ++i) {
    if (auto r = is_spider(g, spiders[i], d, from, to); !r) {
      r.message = "spider " + std::to_string(i) + ": " + r.message;
      return r;
    }
    used.insert(used.end(), spiders[i].tree.vertices.begin(), spiders[i].tree.vertices.end());
  }
  std::sort(used.begin(), used.end());
  if (std::adjacent_find(used.begin(), used.end()) != used.end())
    return CheckReport::fail("disjoint", "spiders share a vertex");
  return CheckReport::pass();
}

std::optional<Spider> find_spider(const MultiGraph& g, std::span<const VertexId> x, std::span<const VertexId> y,
                                  int d, std::span<const VertexId> avoid) {
  check_spider_args(d, 0);
  std::vector<VertexId> xs = sorted_ids(x), ys = sorted_ids(y), zs = sorted_ids(avoid);
  check_vertices(g, xs);
  check_vertices(g, ys);
  check_vertices(g, zs);
  for (VertexId v : xs) {
    if (contains(zs, v)) continue;
    // With d = 1 the head is itself a leaf, so it must lie in y.
    if (d == 1 && !contains(ys, v)) continue;
    std::vector<VertexId> targets;
    for (VertexId t : ys)
      if (t != v && !contains(zs, t)) targets.push_back(t);
    DisjointPaths fan = max_fan(g, v, targets, zs, d);
    if (fan.count >= d) {
      fan.paths.resize(d);
      return assemble(g, v, fan.paths);
    }
  }
  return std::nullopt;
}

std::optional<std::vector<Spider>> find_spider_packing(const MultiGraph& g, std::span<const VertexId> x,
                                                       std::span<const VertexId> y, int d, int h,
                                                       const Guards& guards) {
  check_spider_args(d, h);
  std::vector<VertexId> xs = sorted_ids(x), ys = sorted_ids(y);
  check_vertices(g, xs);
  check_vertices(g, ys);
  check_disjoint(xs, ys);
  check_size(g, guards);
  if (h == 0) return std::vector<Spider>{};
  std::vector<VertexId> candidates;
  for (VertexId v : xs) {
    std::vector<VertexId> one{v};
    if (find_spider(g, one, ys, d)) candidates.push_back(v);
  }
  std::optional<std::vector<Spider>> out;
  for_each_subset(static_cast<int>(candidates.size()), h, [&](const std::vector<int>& pick) {
    std::vector<VertexId> heads;
    for (int i : pick) heads.push_back(candidates[i]);
    out = pack_heads(g, heads, ys, d);
    return out.has_value();
  });
  return out;
}

bool is_spider_cover(const MultiGraph& g, std::span<const VertexId> x, std::span<const VertexId> y, int d,
                     std::span<const VertexId> c) {
  return !find_spider(g, x, y, d, c).has_value();
}

std::vector<VertexId> min_spider_cover(const MultiGraph& g, std::span<const VertexId> x,
                                       std::span<const VertexId> y, int d, const Guards& guards) {
  check_spider_args(d, 0);
  std::vector<VertexId> xs = sorted_ids(x), ys = sorted_ids(y);
  check_vertices(g, xs);
  check_vertices(g, ys);
  check_disjoint(xs, ys);
  check_size(g, guards);
  const int n = g.vertex_count();
  std::vector<VertexId> best;
  for (int size = 0; size <= n; ++size) {
    bool done = for_each_subset(n, size, [&](const std::vector<int>& pick) {
      std::vector<VertexId> c;
      for (int i : pick) c.push_back(g.vertices()[i]);
      if (!is_spider_cover(g, xs, ys, d, c)) return false;
      best = std::move(c);
      return true;
    });
    if (done) return best;
  }
  return g.vertices();
}

double spider_cover_bound(int h, int d) {
  return 1.5 * std::pow(static_cast<double>(h) * d, d + 1) + d / 2.0 + 1;
}

DichotomyResult erdos_posa_dichotomy(const MultiGraph& g, std::span<const VertexId> x,
                                     std::span<const VertexId> y, int d, int h, const Guards& guards) {
  DichotomyResult out;
  out.bound = spider_cover_bound(h, d);
  if (auto packing = find_spider_packing(g, x, y, d, h, guards)) {
    out.variant = DichotomyResult::Variant::packing;
    out.packing = std::move(*packing);
  } else {
    out.variant = DichotomyResult::Variant::cover;
    out.cover = min_spider_cover(g, x, y, d, guards);
  }
  return out;
}

std::optional<std::vector<std::vector<VertexId>>> free_head_packing(const MultiGraph& g, const Tangle& t,
                                                                    std::span<const VertexId> s, int d,
                                                                    int h) {
  check_spider_args(d, h);
  std::vector<VertexId> ss = sorted_ids(s);
  check_vertices(g, ss);
  for (VertexId v : ss)
    if (g.degree(v) < d)
      throw PreconditionError("vertex " + std::to_string(v) + " has degree below " + std::to_string(d));
  if (h == 0) return std::vector<std::vector<VertexId>>{};

  std::vector<std::vector<VertexId>> candidates;
  for (VertexId v : ss) {
    std::vector<VertexId> nb = g.neighbors(v);
    for_each_subset(static_cast<int>(nb.size()), d - 1, [&](const std::vector<int>& pick) {
      std::vector<VertexId> set{v};
      for (int i : pick) set.push_back(nb[i]);
      std::sort(set.begin(), set.end());
      candidates.push_back(std::move(set));
      return false;
    });
  }
  std::vector<std::vector<VertexId>> chosen;
  std::vector<VertexId> used;
  auto dfs = [&](auto&& self, std::size_t start) -> bool {
    if (static_cast<int>(chosen.size()) == h) return is_free(g, t, used);
    for (std::size_t i = start; i < candidates.size(); ++i) {
      const auto& c = candidates[i];
      if (std::any_of(c.begin(), c.end(), [&](VertexId v) { return contains(used, v); })) continue;
      std::vector<VertexId> before = used;
      used.insert(used.end(), c.begin(), c.end());
      std::sort(used.begin(), used.end());
      chosen.push_back(c);
      if (self(self, i + 1)) return true;
      chosen.pop_back();
      used = std::move(before);
    }
    return false;
  };
  if (dfs(dfs, 0)) return chosen;
  return std::nullopt;
}

CheckReport verify_head_obstruction(const MultiGraph& g, const Tangle& t, std::span<const VertexId> s, int d,
                                    std::span<const VertexId> c) {
  std::vector<VertexId> ss = sorted_ids(s), cs = sorted_ids(c);
  check_vertices(g, ss);
  check_vertices(g, cs);
  if (static_cast<int>(cs.size()) >= t.order)
    return CheckReport::fail("size", "|C| must be smaller than the tangle order");
  Tangle rest = tangle_minus(g, t, cs);
  for (VertexId v : ss) {
    if (contains(cs, v)) continue;
    bool cut_off = std::any_of(rest.members.begin(), rest.members.end(), [&](const Separation& m) {
      return m.order() < d && contains(m.a.vertices, v) && !contains(m.b.vertices, v);
    });
    if (!cut_off)
      return CheckReport::fail("head", "vertex " + std::to_string(v) + " is not cut off by a member of order < " +
                                           std::to_string(d));
  }
  return CheckReport::pass();
}

}  // namespace tk
