#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <bitset>
#include <map>
#include <numeric>
#include <set>

namespace oracle {

using tk::MultiGraph;
using tk::Separation;
using tk::SubgraphRef;
using tk::VertexId;

int min_vertex_cut(const MultiGraph& g, const std::vector<VertexId>& src, const std::vector<VertexId>& dst) {
  const int n = g.vertex_count();
  auto blocked_reaches = [&](unsigned mask) {
    std::vector<char> seen(n, 0);
    std::vector<int> stack;
    for (VertexId s : src) {
      int si = g.vertex_index(s);
      if (!(mask >> si & 1) && !seen[si]) {
        seen[si] = 1;
        stack.push_back(si);
      }
    }
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (const tk::Edge& e : g.edges()) {
        int a = g.vertex_index(e.u), b = g.vertex_index(e.v);
        int y = a == x ? b : b == x ? a : -1;
        if (y < 0 || seen[y] || (mask >> y & 1)) continue;
        seen[y] = 1;
        stack.push_back(y);
      }
    }
    for (VertexId t : dst)
      if (seen[g.vertex_index(t)]) return true;
    return false;
  };
  for (int size = 0; size <= n; ++size)
    for (unsigned mask = 0; mask < (1u << n); ++mask)
      if (std::popcount(mask) == size && !blocked_reaches(mask)) return size;
  return n;
}

std::vector<Separation> separations(const MultiGraph& g, int max_order) {
  const int n = g.vertex_count();
  std::vector<Separation> out;
  std::vector<int> side(n, 0);  // 0 = A only, 1 = B only, 2 = both
  long long total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  for (long long code = 0; code < total; ++code) {
    long long c = code;
    int both = 0;
    for (int i = 0; i < n; ++i) {
      side[i] = static_cast<int>(c % 3);
      c /= 3;
      both += side[i] == 2;
    }
    if (both >= max_order) continue;
    // Edges forced to a side, and free edges inside the overlap.
    std::vector<tk::EdgeId> to_a, to_b, loose;
    bool valid = true;
    for (const tk::Edge& e : g.edges()) {
      int su = side[g.vertex_index(e.u)], sv = side[g.vertex_index(e.v)];
      bool a = su == 0 || sv == 0, b = su == 1 || sv == 1;
      if (a && b) valid = false;
      if (a)
        to_a.push_back(e.id);
      else if (b)
        to_b.push_back(e.id);
      else
        loose.push_back(e.id);
    }
    if (!valid) continue;
    for (unsigned bits = 0; bits < (1u << loose.size()); ++bits) {
      Separation s;
      for (int i = 0; i < n; ++i) {
        if (side[i] != 1) s.a.vertices.push_back(g.vertices()[i]);
        if (side[i] != 0) s.b.vertices.push_back(g.vertices()[i]);
      }
      s.a.edges = to_a;
      s.b.edges = to_b;
      for (std::size_t k = 0; k < loose.size(); ++k) (bits >> k & 1 ? s.a.edges : s.b.edges).push_back(loose[k]);
      std::sort(s.a.edges.begin(), s.a.edges.end());
      std::sort(s.b.edges.begin(), s.b.edges.end());
      out.push_back(std::move(s));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct Side {
  std::bitset<64> v;
  std::bitset<192> e;
};

Side encode(const MultiGraph& g, const SubgraphRef& r) {
  Side s;
  for (VertexId v : r.vertices) s.v.set(g.vertex_index(v));
  for (tk::EdgeId e : r.edges) s.e.set(g.edge_index(e));
  return s;
}

bool covers(const MultiGraph& g, const Side& x) {
  return static_cast<int>(x.v.count()) == g.vertex_count() && static_cast<int>(x.e.count()) == g.edge_count();
}

Side join(const Side& a, const Side& b) { return {a.v | b.v, a.e | b.e}; }

}  // namespace

bool satisfies_axioms(const MultiGraph& g, int order, const std::vector<Separation>& members) {
  std::set<Separation> have(members.begin(), members.end());
  for (const Separation& s : separations(g, order)) {
    bool fwd = have.count(s) > 0, back = have.count(s.reversed()) > 0;
    if (fwd == back) return false;
  }
  for (const Separation& s : members) {
    if (s.order() >= order) return false;
    if (static_cast<int>(s.a.vertices.size()) == g.vertex_count()) return false;
  }
  std::vector<Side> sides;
  for (const Separation& s : members) sides.push_back(encode(g, s.a));
  for (std::size_t i = 0; i < sides.size(); ++i)
    for (std::size_t j = i; j < sides.size(); ++j)
      for (std::size_t k = j; k < sides.size(); ++k)
        if (covers(g, join(join(sides[i], sides[j]), sides[k]))) return false;
  return true;
}

std::vector<std::vector<Separation>> tangles(const MultiGraph& g, int order) {
  std::vector<Separation> all = separations(g, order);
  std::map<Separation, int> index;
  for (int i = 0; i < static_cast<int>(all.size()); ++i) index[all[i]] = i;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < static_cast<int>(all.size()); ++i) {
    int j = index.at(all[i].reversed());
    if (i <= j) pairs.emplace_back(i, j);
  }
  std::vector<Side> sides;
  for (const Separation& s : all) sides.push_back(encode(g, s.a));

  std::vector<std::vector<Separation>> found;
  std::vector<int> chosen;
  auto admissible = [&](int x) {
    if (static_cast<int>(all[x].a.vertices.size()) == g.vertex_count()) return false;
    for (std::size_t i = 0; i < chosen.size(); ++i) {
      Side xi = join(sides[x], sides[chosen[i]]);
      if (covers(g, xi)) return false;
      for (std::size_t j = i; j < chosen.size(); ++j)
        if (covers(g, join(xi, sides[chosen[j]]))) return false;
    }
    return true;
  };
  auto dfs = [&](auto&& self, std::size_t p) -> void {
    if (p == pairs.size()) {
      std::vector<Separation> t;
      for (int x : chosen) t.push_back(all[x]);
      std::sort(t.begin(), t.end());
      found.push_back(std::move(t));
      return;
    }
    for (int x : {pairs[p].first, pairs[p].second}) {
      if (!admissible(x)) continue;
      chosen.push_back(x);
      self(self, p + 1);
      chosen.pop_back();
    }
  };
  dfs(dfs, 0);
  std::sort(found.begin(), found.end());
  return found;
}

std::vector<unsigned> spider_vertex_sets(const MultiGraph& g, const std::vector<VertexId>& x,
                                         const std::vector<VertexId>& y, int d) {
  const int n = g.vertex_count(), m = g.edge_count();
  unsigned xmask = 0, ymask = 0;
  for (VertexId v : x) xmask |= 1u << g.vertex_index(v);
  for (VertexId v : y) ymask |= 1u << g.vertex_index(v);
  std::set<unsigned> out;
  for (unsigned long long pick = 1; pick < (1ull << m); ++pick) {
    std::vector<int> deg(n, 0);
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      return a;
    };
    bool forest = true;
    unsigned verts = 0;
    for (int k = 0; k < m && forest; ++k) {
      if (!(pick >> k & 1)) continue;
      const tk::Edge& e = g.edges()[k];
      int a = g.vertex_index(e.u), b = g.vertex_index(e.v);
      if (find(a) == find(b)) forest = false;
      parent[find(a)] = find(b);
      ++deg[a];
      ++deg[b];
      verts |= 1u << a | 1u << b;
    }
    if (!forest) continue;
    int roots = 0;
    for (int i = 0; i < n; ++i)
      if ((verts >> i & 1) && find(i) == i) ++roots;
    if (roots != 1) continue;
    for (int head = 0; head < n; ++head) {
      if (!(xmask >> head & 1) || deg[head] != d) continue;
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) {
        if (!(verts >> i & 1)) continue;
        if (i != head && deg[i] > 2) ok = false;
        if (deg[i] == 1 && !(ymask >> i & 1)) ok = false;
      }
      if (ok) out.insert(verts);
    }
  }
  return {out.begin(), out.end()};
}

int max_disjoint_sets(const std::vector<unsigned>& sets, int cap) {
  int best = 0;
  auto dfs = [&](auto&& self, std::size_t start, unsigned used, int count) -> void {
    best = std::max(best, count);
    if (best >= cap) return;
    for (std::size_t i = start; i < sets.size(); ++i)
      if (!(sets[i] & used)) self(self, i + 1, used | sets[i], count + 1);
  };
  dfs(dfs, 0, 0, 0);
  return std::min(best, cap);
}

int max_linkage(const MultiGraph& g, const std::vector<VertexId>& src, const std::vector<VertexId>& dst) {
  int n = g.vertex_count();
  std::vector<unsigned> adj(n, 0);
  for (const tk::Edge& e : g.edges()) {
    adj[g.vertex_index(e.u)] |= 1u << g.vertex_index(e.v);
    adj[g.vertex_index(e.v)] |= 1u << g.vertex_index(e.u);
  }
  unsigned s = 0, t = 0;
  for (VertexId v : src) s |= 1u << g.vertex_index(v);
  for (VertexId v : dst) t |= 1u << g.vertex_index(v);
  std::set<unsigned> found;
  auto walk = [&](auto&& self, int at, unsigned used) -> void {
    if (t >> at & 1) {
      found.insert(used);
      return;
    }
    for (int w = 0; w < n; ++w)
      if ((adj[at] >> w & 1) && !(used >> w & 1) && !(s >> w & 1)) self(self, w, used | 1u << w);
  };
  for (int v = 0; v < n; ++v)
    if (s >> v & 1) walk(walk, v, 1u << v);
  std::vector<unsigned> minimal;
  for (unsigned a : found)
    if (std::none_of(found.begin(), found.end(), [&](unsigned b) { return b != a && (b & a) == b; }))
      minimal.push_back(a);
  return max_disjoint_sets(minimal, std::popcount(s));
}

int min_hitting_set(const std::vector<unsigned>& sets, int n) {
  int best = n;
  for (unsigned c = 0; c < (1u << n); ++c) {
    if (std::popcount(c) >= best) continue;
    if (std::all_of(sets.begin(), sets.end(), [&](unsigned s) { return (s & c) != 0; })) best = std::popcount(c);
  }
  return best;
}

namespace {

using Adj = std::vector<unsigned>;  // adjacency rows as bitmasks

unsigned long long code_of(const Adj& adj, const std::vector<int>& perm) {
  const int n = static_cast<int>(adj.size());
  unsigned long long code = 0;
  int bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit)
      if (adj[perm[i]] >> perm[j] & 1) code |= 1ull << bit;
  return code;
}

unsigned long long canonical(const Adj& adj) {
  std::vector<int> perm(adj.size());
  std::iota(perm.begin(), perm.end(), 0);
  unsigned long long best = ~0ull;
  do best = std::min(best, code_of(adj, perm));
  while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

Adj decode(unsigned long long code, int n) {
  Adj adj(n, 0);
  int bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit)
      if (code >> bit & 1) {
        adj[i] |= 1u << j;
        adj[j] |= 1u << i;
      }
  return adj;
}

bool adj_connected(const Adj& adj) {
  const int n = static_cast<int>(adj.size());
  if (n == 0) return false;
  unsigned seen = 1, frontier = 1;
  while (frontier) {
    unsigned next = 0;
    for (int i = 0; i < n; ++i)
      if (frontier >> i & 1) next |= adj[i];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (1u << n) - 1;
}

MultiGraph to_graph(const Adj& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (adj[i] >> j & 1) pairs.emplace_back(i, j);
  return MultiGraph::from_edge_pairs(n, pairs);
}

/// Classes on n vertices grown from classes on n-1 by adding a vertex.
std::vector<Adj> grow(int n, bool connected_only) {
  std::set<unsigned long long> level{0};
  for (int k = 2; k <= n; ++k) {
    std::set<unsigned long long> next;
    for (unsigned long long code : level) {
      Adj base = decode(code, k - 1);
      for (unsigned nb = connected_only ? 1 : 0; nb < (1u << (k - 1)); ++nb) {
        Adj adj = base;
        adj.push_back(nb);
        for (int i = 0; i < k - 1; ++i)
          if (nb >> i & 1) adj[i] |= 1u << (k - 1);
        next.insert(canonical(adj));
      }
    }
    level = std::move(next);
  }
  std::vector<Adj> out;
  for (unsigned long long code : level) {
    Adj adj = decode(code, n);
    if (!connected_only || adj_connected(adj)) out.push_back(adj);
  }
  return out;
}

}  // namespace

std::vector<MultiGraph> connected_graphs(int n) {
  std::vector<MultiGraph> out;
  for (const Adj& adj : grow(n, true)) out.push_back(to_graph(adj));
  return out;
}

std::vector<MultiGraph> all_graphs(int n) {
  std::vector<MultiGraph> out;
  for (const Adj& adj : grow(n, false)) out.push_back(to_graph(adj));
  return out;
}

int planar_face_cover(const MultiGraph& g) {
  const int n = g.vertex_count(), m = g.edge_count();
  // Dart 2e runs u->v along edge e, dart 2e+1 runs back.
  auto tail = [&](int d) { const tk::Edge& e = g.edges()[d / 2]; return g.vertex_index(d % 2 ? e.v : e.u); };
  std::vector<std::vector<int>> out(n);
  for (int d = 0; d < 2 * m; ++d) out[tail(d)].push_back(d);
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (const auto& c : g.components()) {
    for (VertexId v : c) comp[g.vertex_index(v)] = ncomp;
    ++ncomp;
  }
  std::vector<int> cv(ncomp, 0), ce(ncomp, 0);
  for (int i = 0; i < n; ++i) ++cv[comp[i]];
  for (const tk::Edge& e : g.edges()) ++ce[comp[g.vertex_index(e.u)]];
  std::vector<int> targets;
  for (int i = 0; i < n; ++i)
    if (static_cast<int>(out[i].size()) >= 4) targets.push_back(i);
  // Simple plane graphs have at most 3V - 6 edges.
  for (int c = 0; c < ncomp; ++c)
    if (cv[c] >= 3 && ce[c] > 3 * cv[c] - 6) return -1;

  int best = -1;
  std::vector<std::vector<int>> rot = out;
  while (true) {
    std::vector<int> succ(2 * m);
    for (int i = 0; i < n; ++i)
      for (std::size_t k = 0; k < rot[i].size(); ++k) succ[rot[i][k]] = rot[i][(k + 1) % rot[i].size()];
    // Faces: follow d, then leave the head of d by the dart after d's reverse.
    std::vector<int> face_of(2 * m, -1);
    std::vector<unsigned> face_targets;
    std::vector<int> face_comp, cf(ncomp, 0);
    for (int d0 = 0; d0 < 2 * m; ++d0) {
      if (face_of[d0] >= 0) continue;
      int id = static_cast<int>(face_targets.size());
      unsigned mask = 0;
      for (int d = d0; face_of[d] < 0; d = succ[d ^ 1]) {
        face_of[d] = id;
        for (std::size_t t = 0; t < targets.size(); ++t)
          if (targets[t] == tail(d)) mask |= 1u << t;
      }
      face_targets.push_back(mask);
      face_comp.push_back(comp[tail(d0)]);
      ++cf[comp[tail(d0)]];
    }
    for (int i = 0; i < n; ++i)
      if (out[i].empty()) ++cf[comp[i]];
    bool planar = true;
    for (int c = 0; c < ncomp; ++c) planar = planar && cv[c] - ce[c] + cf[c] == 2;
    if (planar) {
      if (targets.empty()) return 0;
      int f = static_cast<int>(face_targets.size());
      unsigned full = (1u << targets.size()) - 1;
      for (unsigned s = 1; s < (1u << f); ++s) {
        unsigned hit = 0, comps = 0;
        for (int i = 0; i < f; ++i)
          if (s >> i & 1) {
            hit |= face_targets[i];
            comps |= 1u << face_comp[i];
          }
        if (hit != full) continue;
        int value = std::popcount(s) - std::popcount(comps) + 1;
        if (best < 0 || value < best) best = value;
      }
    }
    int i = 0;
    for (; i < n; ++i)
      if (rot[i].size() > 2 && std::next_permutation(rot[i].begin() + 1, rot[i].end())) break;
    if (i == n) break;
  }
  return best;
}

}  // namespace oracle
