#include "tanglekit/tangle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

#include "atoms.hpp"
#include "id_sets.hpp"
#include "separations.hpp"

namespace tk {

namespace detail {

AtomIndex::AtomIndex(const MultiGraph& g) : g_(g) {
  if (g.vertex_count() > kMaskVertices || g.edge_count() > kMaskEdges)
    throw GuardError("separation machinery supports at most 64 vertices and 192 edges");
  for (int vi = 0; vi < g.vertex_count(); ++vi) full_.set_vertex(vi);
  for (int ei = 0; ei < g.edge_count(); ++ei) full_.set_edge(ei);
}

AtomMask AtomIndex::encode(const SubgraphRef& ref) const {
  AtomMask m;
  for (VertexId v : ref.vertices) m.set_vertex(g_.vertex_index(v));
  for (EdgeId e : ref.edges) m.set_edge(g_.edge_index(e));
  return m;
}

SubgraphRef AtomIndex::decode(const AtomMask& m) const {
  SubgraphRef out;
  for (int vi = 0; vi < g_.vertex_count(); ++vi)
    if (m.has_vertex(vi)) out.vertices.push_back(g_.vertices()[vi]);
  for (int ei = 0; ei < g_.edge_count(); ++ei)
    if (m.has_edge(ei)) out.edges.push_back(g_.edges()[ei].id);
  return out;
}

std::vector<SepMask> separation_masks(const AtomIndex& ix, int max_order, const Guards& guards) {
  const MultiGraph& g = ix.graph();
  const int n = g.vertex_count();
  if (!guards.override_vertex_caps && n > guards.max_separation_vertices)
    throw GuardError("separation enumeration capped at " +
                     std::to_string(guards.max_separation_vertices) + " vertices (host has " +
                     std::to_string(n) + ")");
  std::vector<SepMask> out;
  if (max_order <= 0) return out;

  std::vector<int> eu(g.edge_count()), ev(g.edge_count());
  for (int ei = 0; ei < g.edge_count(); ++ei) {
    eu[ei] = g.vertex_index(g.edges()[ei].u);
    ev[ei] = g.vertex_index(g.edges()[ei].v);
  }
  std::vector<std::vector<int>> adj(n);
  for (int ei = 0; ei < g.edge_count(); ++ei)
    if (eu[ei] != ev[ei]) {
      adj[eu[ei]].push_back(ev[ei]);
      adj[ev[ei]].push_back(eu[ei]);
    }

  std::int64_t budget = 0;
  std::vector<int> comp(n);
  auto emit = [&](std::uint64_t xbits, int xsize) {
    std::fill(comp.begin(), comp.end(), -1);
    std::vector<AtomMask> parts;
    for (int s = 0; s < n; ++s) {
      if ((xbits >> s) & 1 || comp[s] >= 0) continue;
      const int c = static_cast<int>(parts.size());
      parts.emplace_back();
      std::vector<int> stack{s};
      comp[s] = c;
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        parts[c].set_vertex(x);
        for (int y : adj[x])
          if (!((xbits >> y) & 1) && comp[y] < 0) {
            comp[y] = c;
            stack.push_back(y);
          }
      }
    }
    std::vector<int> inner;
    for (int ei = 0; ei < g.edge_count(); ++ei) {
      bool in_u = (xbits >> eu[ei]) & 1, in_v = (xbits >> ev[ei]) & 1;
      if (in_u && in_v)
        inner.push_back(ei);
      else
        parts[comp[in_u ? ev[ei] : eu[ei]]].set_edge(ei);
    }
    const int free_bits = static_cast<int>(parts.size() + inner.size());
    if (free_bits > 40) throw GuardError("separation count overflow");
    const std::uint64_t count = std::uint64_t{1} << free_bits;
    budget += static_cast<std::int64_t>(count);
    if (budget > guards.max_separations)
      throw GuardError("more than " + std::to_string(guards.max_separations) + " separations");
    AtomMask base;
    base.w[0] = xbits;
    const int offset = static_cast<int>(out.size());
    for (std::uint64_t bits = 0; bits < count; ++bits) {
      SepMask s{base, base, xsize, offset + static_cast<int>(count - 1 - bits)};
      for (std::size_t c = 0; c < parts.size(); ++c) ((bits >> c) & 1 ? s.a : s.b) |= parts[c];
      for (std::size_t k = 0; k < inner.size(); ++k) {
        if ((bits >> (parts.size() + k)) & 1)
          s.a.set_edge(inner[k]);
        else
          s.b.set_edge(inner[k]);
      }
      out.push_back(s);
    }
  };

  // Separators in order of size, each size in lexicographic index order.
  for (int size = 0; size < max_order && size <= n; ++size) {
    std::vector<int> pick(size);
    auto rec = [&](auto&& self, int depth, int start, std::uint64_t bits) -> void {
      if (depth == size) {
        emit(bits, size);
        return;
      }
      for (int i = start; i <= n - (size - depth); ++i)
        self(self, depth + 1, i + 1, bits | (std::uint64_t{1} << i));
    };
    rec(rec, 0, 0, 0);
  }
  return out;
}

}  // namespace detail

namespace {

using detail::AtomIndex;
using detail::AtomMask;
using detail::SepMask;
using detail::check_vertices;
using detail::includes;
using detail::sorted_ids;

Separation decode(const AtomIndex& ix, const SepMask& s) { return {ix.decode(s.a), ix.decode(s.b)}; }

/// Search state for tangle enumeration: one decision per separation pair,
/// unit propagation through pair conflicts, and a triple check against the
/// inclusion-maximal A-sides chosen so far.
class TangleSearch {
 public:
  TangleSearch(const AtomIndex& ix, std::vector<SepMask> seps) : ix_(ix), seps_(std::move(seps)) {
    const int s = static_cast<int>(seps_.size());
    const std::uint64_t all_vertices = ix.full().vertex_bits();
    forbidden_.assign(s, 0);
    for (int i = 0; i < s; ++i) forbidden_[i] = seps_[i].a.vertex_bits() == all_vertices;
    conflicts_.assign(s, {});
    for (int i = 0; i < s; ++i) {
      if (forbidden_[i]) continue;
      for (int j = i + 1; j < s; ++j)
        if (!forbidden_[j] && j != seps_[i].reverse && (seps_[i].a | seps_[j].a) == ix.full()) {
          conflicts_[i].push_back(j);
          conflicts_[j].push_back(i);
        }
    }
    for (int i = 0; i < s; ++i)
      if (i < seps_[i].reverse) pairs_.push_back(i);
    std::stable_sort(pairs_.begin(), pairs_.end(),
                     [&](int x, int y) { return seps_[x].order < seps_[y].order; });
    chosen_.assign(s, 0);
  }

  std::vector<Tangle> run(int order) {
    order_ = order;
    std::vector<int> maxima;
    // A separation equal to its own reverse has V(A) = V(G) and can never
    // be oriented.
    bool ok = true;
    for (int i = 0; i < static_cast<int>(seps_.size()); ++i)
      if (seps_[i].reverse == i) ok = false;
    // Separations whose A-side spans every vertex force their reverse.
    for (int i = 0; i < static_cast<int>(seps_.size()) && ok; ++i)
      if (forbidden_[i]) ok = assign(seps_[i].reverse, maxima);
    if (ok) dfs(0, maxima);
    std::sort(found_.begin(), found_.end(),
              [](const Tangle& x, const Tangle& y) { return x.members < y.members; });
    return std::move(found_);
  }

 private:
  bool triple_free(const AtomMask& a, const std::vector<int>& maxima) const {
    for (int m : maxima)
      if (a.subset_of(seps_[m].a)) return true;
    const AtomMask& full = ix_.full();
    for (std::size_t i = 0; i < maxima.size(); ++i) {
      const AtomMask ai = a | seps_[maxima[i]].a;
      if (ai == full) return false;
      for (std::size_t j = i + 1; j < maxima.size(); ++j)
        if ((ai | seps_[maxima[j]].a) == full) return false;
    }
    return true;
  }

  bool assign(int first, std::vector<int>& maxima) {
    std::vector<int> queue{first};
    while (!queue.empty()) {
      int x = queue.back();
      queue.pop_back();
      if (chosen_[x]) continue;
      if (chosen_[seps_[x].reverse] || forbidden_[x]) return false;
      if (!triple_free(seps_[x].a, maxima)) return false;
      chosen_[x] = 1;
      trail_.push_back(x);
      bool dominated = false;
      for (int m : maxima) dominated = dominated || seps_[x].a.subset_of(seps_[m].a);
      if (!dominated) {
        std::erase_if(maxima, [&](int m) { return seps_[m].a.subset_of(seps_[x].a); });
        maxima.push_back(x);
      }
      for (int t : conflicts_[x]) {
        if (chosen_[t]) return false;
        queue.push_back(seps_[t].reverse);
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      chosen_[trail_.back()] = 0;
      trail_.pop_back();
    }
  }

  void dfs(std::size_t pos, const std::vector<int>& maxima) {
    while (pos < pairs_.size() &&
           (chosen_[pairs_[pos]] || chosen_[seps_[pairs_[pos]].reverse]))
      ++pos;
    if (pos == pairs_.size()) {
      record();
      return;
    }
    int x = pairs_[pos], y = seps_[x].reverse;
    if (seps_[y].a.vertex_count() < seps_[x].a.vertex_count()) std::swap(x, y);
    for (int pick : {x, y}) {
      std::size_t mark = trail_.size();
      std::vector<int> next = maxima;
      if (assign(pick, next)) dfs(pos + 1, next);
      undo(mark);
    }
  }

  void record() {
    Tangle t;
    t.order = order_;
    for (int i = 0; i < static_cast<int>(seps_.size()); ++i)
      if (chosen_[i]) t.members.push_back(decode(ix_, seps_[i]));
    std::sort(t.members.begin(), t.members.end());
    found_.push_back(std::move(t));
  }

  const AtomIndex& ix_;
  std::vector<SepMask> seps_;
  std::vector<char> forbidden_;
  std::vector<std::vector<int>> conflicts_;
  std::vector<int> pairs_;
  std::vector<char> chosen_;
  std::vector<int> trail_;
  std::vector<Tangle> found_;
  int order_ = 0;
};

}  // namespace

int Separation::order() const {
  int count = 0;
  std::size_t i = 0, j = 0;
  while (i < a.vertices.size() && j < b.vertices.size()) {
    if (a.vertices[i] < b.vertices[j])
      ++i;
    else if (b.vertices[j] < a.vertices[i])
      ++j;
    else
      ++count, ++i, ++j;
  }
  return count;
}

std::vector<VertexId> Separation::boundary() const {
  std::vector<VertexId> out;
  std::set_intersection(a.vertices.begin(), a.vertices.end(), b.vertices.begin(), b.vertices.end(),
                        std::back_inserter(out));
  return out;
}

std::strong_ordering operator<=>(const Separation& x, const Separation& y) {
  if (auto c = x.a.vertices <=> y.a.vertices; c != 0) return c;
  if (auto c = x.b.vertices <=> y.b.vertices; c != 0) return c;
  if (auto c = x.a.edges <=> y.a.edges; c != 0) return c;
  return x.b.edges <=> y.b.edges;
}

void validate_separation(const MultiGraph& g, const Separation& s) {
  validate_subgraph(g, s.a);
  validate_subgraph(g, s.b);
  SubgraphRef u = unite(s.a, s.b);
  if (u.vertices.size() != static_cast<std::size_t>(g.vertex_count()) ||
      u.edges.size() != static_cast<std::size_t>(g.edge_count()))
    throw InputError("sides of a separation must cover the whole graph");
  std::vector<EdgeId> common;
  std::set_intersection(s.a.edges.begin(), s.a.edges.end(), s.b.edges.begin(), s.b.edges.end(),
                        std::back_inserter(common));
  if (!common.empty())
    throw InputError("edge " + std::to_string(common.front()) + " lies on both sides of a separation");
}

std::vector<Separation> enumerate_separations(const MultiGraph& g, int max_order, const Guards& guards) {
  if (max_order < 0) throw PreconditionError("max_order must be non-negative");
  AtomIndex ix(g);
  std::vector<Separation> out;
  for (const SepMask& s : detail::separation_masks(ix, max_order, guards)) out.push_back(decode(ix, s));
  std::sort(out.begin(), out.end());
  return out;
}

TangleReport is_tangle(const MultiGraph& g, const Tangle& t, const Guards& guards) {
  if (t.order < 1) throw InputError("tangle order must be positive");
  for (const Separation& s : t.members) {
    validate_separation(g, s);
    if (s.order() >= t.order)
      throw InputError("member of order " + std::to_string(s.order()) + " in a tangle of order " +
                       std::to_string(t.order));
  }
  TangleReport report;
  auto fail = [&](std::string axiom, std::string message, std::vector<Separation> witness) {
    report.ok = false;
    report.axiom = std::move(axiom);
    report.message = std::move(message);
    report.witness = std::move(witness);
    return report;
  };

  for (const Separation& s : t.members)
    if (s.a.vertices.size() == static_cast<std::size_t>(g.vertex_count()))
      return fail("T3", "V(A) = V(G)", {s});

  AtomIndex ix(g);
  std::unordered_set<AtomMask, detail::AtomMaskHash> a_sides;
  std::set<std::pair<AtomMask, AtomMask>> members;
  for (const Separation& s : t.members) members.emplace(ix.encode(s.a), ix.encode(s.b));

  std::vector<SepMask> seps = detail::separation_masks(ix, t.order, guards);
  for (int i = 0; i < static_cast<int>(seps.size()); ++i) {
    const SepMask& s = seps[i];
    if (i > s.reverse) continue;
    bool fwd = members.count({s.a, s.b}) > 0, back = members.count({s.b, s.a}) > 0;
    if (!fwd && !back) return fail("T1", "neither orientation is a member", {decode(ix, s)});
    if (fwd && back)
      return fail("T1", "both orientations are members", {decode(ix, s), decode(ix, seps[s.reverse])});
  }

  // Triples only need the inclusion-maximal A-sides.
  std::vector<std::pair<AtomMask, AtomMask>> maxima;
  for (const auto& m : members) {
    bool dominated = false;
    for (const auto& other : members)
      if (m != other && m.first.subset_of(other.first) && !(m.first == other.first && m > other))
        dominated = true;
    if (!dominated) maxima.push_back(m);
  }
  for (std::size_t i = 0; i < maxima.size(); ++i)
    for (std::size_t j = i; j < maxima.size(); ++j) {
      AtomMask ij = maxima[i].first | maxima[j].first;
      for (std::size_t k = j; k < maxima.size(); ++k)
        if ((ij | maxima[k].first) == ix.full()) {
          std::vector<Separation> w;
          for (std::size_t idx : {i, j, k})
            w.push_back({ix.decode(maxima[idx].first), ix.decode(maxima[idx].second)});
          return fail("T2", "three members have A-sides covering G", std::move(w));
        }
    }
  return report;
}

std::vector<Tangle> enumerate_tangles(const MultiGraph& g, int order, const Guards& guards) {
  if (order < 1) throw PreconditionError("tangle order must be positive");
  if (!guards.override_vertex_caps && g.vertex_count() > guards.max_tangle_vertices)
    throw GuardError("tangle enumeration capped at " + std::to_string(guards.max_tangle_vertices) +
                     " vertices (host has " + std::to_string(g.vertex_count()) + ")");
  AtomIndex ix(g);
  TangleSearch search(ix, detail::separation_masks(ix, order, guards));
  return search.run(order);
}

Tangle truncate(const Tangle& t, int new_order) {
  if (new_order < 1 || new_order > t.order)
    throw PreconditionError("truncation order must lie in [1, order]");
  Tangle out{new_order, {}};
  for (const Separation& s : t.members)
    if (s.order() < new_order) out.members.push_back(s);
  return out;
}

Tangle tangle_minus(const MultiGraph& g, const Tangle& t, std::span<const VertexId> z) {
  std::vector<VertexId> zs = sorted_ids(z);
  check_vertices(g, zs);
  if (static_cast<int>(zs.size()) >= t.order)
    throw PreconditionError("|Z| must be smaller than the tangle order");
  auto strip = [&](const SubgraphRef& side) {
    SubgraphRef out;
    std::set_difference(side.vertices.begin(), side.vertices.end(), zs.begin(), zs.end(),
                        std::back_inserter(out.vertices));
    for (EdgeId e : side.edges) {
      const Edge& ed = g.edge(e);
      if (!std::binary_search(zs.begin(), zs.end(), ed.u) && !std::binary_search(zs.begin(), zs.end(), ed.v))
        out.edges.push_back(e);
    }
    return out;
  };
  std::set<Separation> kept;
  for (const Separation& s : t.members) {
    std::vector<VertexId> sep = s.boundary();
    if (std::includes(sep.begin(), sep.end(), zs.begin(), zs.end())) kept.insert({strip(s.a), strip(s.b)});
  }
  return {t.order - static_cast<int>(zs.size()), {kept.begin(), kept.end()}};
}

Tangle induced_tangle(const MultiGraph& g, const MultiGraph& h, const MinorModel& model,
                      const Tangle& t_h, const Guards& guards) {
  if (t_h.order < 2) throw PreconditionError("induced tangles need order at least 2");
  if (auto r = verify_minor(g, h, model); !r) throw InputError("invalid minor model: " + r.message);
  std::set<std::vector<EdgeId>> pattern_sides;
  for (const Separation& s : t_h.members) pattern_sides.insert(s.a.edges);
  // Host edge id -> pattern edge id for the edge images.
  std::map<EdgeId, EdgeId> preimage;
  for (const auto& [f, e] : model.edge_image) preimage[e] = f;
  Tangle out{t_h.order, {}};
  for (Separation& s : enumerate_separations(g, t_h.order, guards)) {
    std::vector<EdgeId> pulled;
    for (EdgeId e : s.a.edges)
      if (auto it = preimage.find(e); it != preimage.end()) pulled.push_back(it->second);
    std::sort(pulled.begin(), pulled.end());
    if (pattern_sides.count(pulled)) out.members.push_back(std::move(s));
  }
  return out;
}

bool is_conformal(const MultiGraph& g, const Tangle& small, const Tangle& big) {
  const Tangle& lo = small.order <= big.order ? small : big;
  const Tangle& hi = small.order <= big.order ? big : small;
  try {
    for (const Separation& s : lo.members) validate_separation(g, s);
    for (const Separation& s : hi.members) validate_separation(g, s);
  } catch (const InputError& e) {
    throw InputError(std::string("tangles do not share the host graph: ") + e.what());
  }
  std::set<Separation> have(hi.members.begin(), hi.members.end());
  return std::all_of(lo.members.begin(), lo.members.end(),
                     [&](const Separation& s) { return have.count(s) > 0; });
}

bool is_free(const MultiGraph& g, const Tangle& t, std::span<const VertexId> x) {
  std::vector<VertexId> xs = sorted_ids(x);
  check_vertices(g, xs);
  for (const Separation& s : t.members)
    if (s.order() < static_cast<int>(xs.size()) && includes(s.a.vertices, xs)) return false;
  return true;
}

bool is_k_free_vertex(const MultiGraph& g, const Tangle& t, VertexId v, int k) {
  if (!g.has_vertex(v)) throw InputError("unknown vertex id " + std::to_string(v));
  if (k > t.order) throw PreconditionError("k-freeness needs k <= tangle order");
  for (const Separation& s : t.members)
    if (s.order() < k && std::binary_search(s.a.vertices.begin(), s.a.vertices.end(), v) &&
        !std::binary_search(s.b.vertices.begin(), s.b.vertices.end(), v))
      return false;
  return true;
}

bool controls_minor(const MultiGraph& g, const MultiGraph& h, const Tangle& t, const MinorModel& model) {
  if (auto r = verify_minor(g, h, model); !r) throw InputError("invalid minor model: " + r.message);
  const int size = static_cast<int>(model.branch.size());
  for (const Separation& s : t.members) {
    if (s.order() >= size) continue;
    for (const auto& [hv, set] : model.branch)
      if (includes(s.a.vertices, set.vertices)) return false;
  }
  return true;
}

}  // namespace tk
