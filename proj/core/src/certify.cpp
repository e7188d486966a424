#include "tanglekit/certify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "id_sets.hpp"
#include "tanglekit/paths.hpp"

namespace tk {

using detail::contains;
using detail::sorted_ids;

namespace {

std::string id(int v) { return std::to_string(v); }

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

struct Frame {
  const RotationEmbedding& e;
  std::vector<Face> faces;
  std::vector<std::vector<int>> corner_face;  ///< by dense vertex index, then corner

  explicit Frame(const RotationEmbedding& emb) : e(emb) {
    validate_embedding(e);
    if (e.host.vertex_count() == 0 || !is_2cell(e))
      throw InputError("the frame must be a connected 2-cell embedding");
    faces = trace_faces(e);
    corner_face.resize(e.host.vertex_count());
    for (int vi = 0; vi < e.host.vertex_count(); ++vi) corner_face[vi].assign(e.rotation[vi].size(), -1);
    for (int f = 0; f < static_cast<int>(faces.size()); ++f)
      for (size_t i = 0; i < faces[f].vertices.size() && i < faces[f].corners.size(); ++i)
        corner_face[e.host.vertex_index(faces[f].vertices[i])][faces[f].corners[i]] = f;
  }
};

// A frame cycle with the closed region on the chosen side of it.
struct Disk {
  std::vector<VertexId> order;  ///< cycle vertices; edges[j] joins order[j] and order[j+1]
  std::vector<EdgeId> edges;
  std::vector<bool> face_in;
  std::set<VertexId> vertices;  ///< closed region
  std::set<EdgeId> edge_set;
  std::string defect;           ///< why the region is not a closed disk

  int position(VertexId v) const {
    auto it = std::find(order.begin(), order.end(), v);
    return it == order.end() ? -1 : static_cast<int>(it - order.begin());
  }
};

int end_at(const Edge& e, VertexId x) { return e.u == x ? 0 : 1; }

Disk make_disk(const Frame& fr, const DiskAssignment& a) {
  const MultiGraph& h = fr.e.host;
  int nf = static_cast<int>(fr.faces.size());
  if (a.side < 0 || a.side >= nf) throw InputError("disk side face " + id(a.side) + " out of range");
  if (a.boundary.empty()) throw InputError("empty disk boundary");
  std::map<VertexId, std::vector<EdgeId>> at;
  for (EdgeId e : a.boundary) {
    if (!h.has_edge(e)) throw InputError("disk boundary edge " + id(e) + " is not a frame edge");
    at[h.edge(e).u].push_back(e);
    at[h.edge(e).v].push_back(e);
  }
  if (std::set<EdgeId>(a.boundary.begin(), a.boundary.end()).size() != a.boundary.size())
    throw InputError("disk boundary repeats an edge");
  for (const auto& [v, es] : at)
    if (es.size() != 2) throw InputError("disk boundary is not a cycle at frame vertex " + id(v));

  Disk d;
  EdgeId cur = a.boundary.front();
  VertexId x = h.edge(cur).u;
  for (size_t step = 0; step < a.boundary.size(); ++step) {
    d.order.push_back(x);
    d.edges.push_back(cur);
    x = h.edge(cur).other(x);
    const auto& es = at[x];
    cur = es[0] == cur ? es[1] : es[0];
  }
  if (x != d.order.front() || d.order.size() != at.size())
    throw InputError("disk boundary is not a single cycle");

  std::vector<EdgeId> on = a.boundary;
  std::sort(on.begin(), on.end());
  int m = h.edge_count();
  UnionFind uf(nf + m + h.vertex_count());
  for (int f = 0; f < nf; ++f) {
    const Face& face = fr.faces[f];
    for (EdgeId e : face.edges)
      if (!std::binary_search(on.begin(), on.end(), e)) uf.unite(f, nf + h.edge_index(e));
    for (VertexId v : face.vertices)
      if (!at.count(v)) uf.unite(f, nf + m + h.vertex_index(v));
  }
  int inside = uf.find(a.side);
  d.face_in.resize(nf);
  int faces = 0;
  std::map<EdgeId, int> hits;
  for (int f = 0; f < nf; ++f) {
    d.face_in[f] = uf.find(f) == inside;
    if (!d.face_in[f]) continue;
    ++faces;
    for (EdgeId e : fr.faces[f].edges)
      if (std::binary_search(on.begin(), on.end(), e)) ++hits[e];
  }
  for (EdgeId e : on)
    if (hits[e] != 1) d.defect = "boundary edge " + id(e) + " does not have the disk on exactly one side";
  for (const Edge& e : h.edges())
    if (std::binary_search(on.begin(), on.end(), e.id) || uf.find(nf + h.edge_index(e.id)) == inside)
      d.edge_set.insert(e.id);
  for (VertexId v : h.vertices())
    if (at.count(v) || uf.find(nf + m + h.vertex_index(v)) == inside) d.vertices.insert(v);
  int chi = static_cast<int>(d.vertices.size()) - static_cast<int>(d.edge_set.size()) + faces;
  if (d.defect.empty() && chi != 1) d.defect = "the region has Euler characteristic " + id(chi);
  return d;
}

// The cyclic sequence appears along the cycle in one direction or the other.
bool in_cyclic_order(const std::vector<int>& positions) {
  int k = static_cast<int>(positions.size());
  if (k <= 2) return true;
  int up = 0, down = 0;
  for (int j = 0; j < k; ++j) {
    int a = positions[j], b = positions[(j + 1) % k];
    if (b < a) ++down;
    if (b > a) ++up;
  }
  return down <= 1 || up <= 1;
}

CheckReport check_arrangement(const MultiGraph& g, const ArrangementCertificate& c, bool with_segregation,
                              bool proper, std::vector<Disk>* disks_out) {
  Frame fr(c.frame);
  const Segregation& seg = c.segregation;
  if (c.disks.size() != seg.size())
    throw InputError(id(static_cast<int>(c.disks.size())) + " disks for " + id(static_cast<int>(seg.size())) +
                     " societies");
  std::vector<Disk> disks;
  for (const DiskAssignment& a : c.disks) disks.push_back(make_disk(fr, a));

  if (with_segregation)
    if (CheckReport r = is_segregation(g, seg); !r) return CheckReport::fail("segregation", r.clause + ": " + r.message);

  std::vector<VertexId> placed = boundary_vertices(seg);
  for (const auto& [v, x] : c.placement)
    if (!contains(placed, v)) return CheckReport::fail("placement", "vertex " + id(v) + " is on no boundary");
  for (VertexId v : placed) {
    auto it = c.placement.find(v);
    if (it == c.placement.end()) return CheckReport::fail("placement", "boundary vertex " + id(v) + " is not placed");
    if (!c.frame.host.has_vertex(it->second))
      return CheckReport::fail("placement", "vertex " + id(v) + " is placed off the frame");
  }
  std::map<VertexId, VertexId> owner;
  for (const auto& [v, x] : c.placement) {
    auto [it, fresh] = owner.emplace(x, v);
    if (!fresh)
      return CheckReport::fail("injective", "vertices " + id(it->second) + " and " + id(v) + " share frame vertex " + id(x));
  }

  for (size_t i = 0; i < disks.size(); ++i)
    if (!disks[i].defect.empty())
      return CheckReport::fail("disk", "society " + id(static_cast<int>(i)) + ": " + disks[i].defect);

  for (size_t i = 0; i < seg.size(); ++i) {
    std::vector<int> positions;
    for (VertexId v : seg[i].boundary) {
      int p = disks[i].position(c.placement.at(v));
      if (p < 0)
        return CheckReport::fail("boundary", "vertex " + id(v) + " of society " + id(static_cast<int>(i)) +
                                                 " is not on its disk boundary");
      positions.push_back(p);
    }
    if (!in_cyclic_order(positions))
      return CheckReport::fail("order", "society " + id(static_cast<int>(i)) + " boundary order differs from its disk");
  }

  for (size_t i = 0; i < seg.size(); ++i)
    for (size_t j = i + 1; j < seg.size(); ++j) {
      std::string pair = "disks " + id(static_cast<int>(i)) + " and " + id(static_cast<int>(j));
      for (size_t f = 0; f < fr.faces.size(); ++f)
        if (disks[i].face_in[f] && disks[j].face_in[f]) return CheckReport::fail("overlap", pair + " share a face");
      for (EdgeId e : disks[i].edge_set)
        if (disks[j].edge_set.count(e)) return CheckReport::fail("overlap", pair + " share frame edge " + id(e));
      for (VertexId x : disks[i].vertices) {
        if (!disks[j].vertices.count(x)) continue;
        auto it = owner.find(x);
        auto on = [&](const Society& s) {
          return it != owner.end() && std::find(s.boundary.begin(), s.boundary.end(), it->second) != s.boundary.end();
        };
        if (!on(seg[i]) || !on(seg[j]))
          return CheckReport::fail("overlap", pair + " meet at frame vertex " + id(x) + " away from a shared boundary vertex");
      }
    }

  if (proper)
    for (size_t i = 0; i < seg.size(); ++i)
      for (size_t j = i + 1; j < seg.size(); ++j) {
        if (seg[i].boundary.size() <= 3 || seg[j].boundary.size() <= 3) continue;
        for (VertexId x : disks[i].vertices)
          if (disks[j].vertices.count(x))
            return CheckReport::fail("proper", "disks " + id(static_cast<int>(i)) + " and " + id(static_cast<int>(j)) +
                                                   " of two large societies meet at frame vertex " + id(x));
      }
  if (disks_out) *disks_out = std::move(disks);
  return CheckReport::pass();
}

// An edge drawn inside disk `society` alongside the cycle arc from
// order[from] forwards to order[to].
struct Piece {
  int society = 0;
  int from = 0;
  int to = 0;
};

RotationEmbedding draw_pieces(const MultiGraph& g, const ArrangementCertificate& c, bool trunk) {
  std::vector<Disk> disks;
  if (CheckReport r = check_arrangement(g, c, true, true, &disks); !r)
    throw InputError("invalid arrangement: " + r.clause + ": " + r.message);
  Frame fr(c.frame);
  const MultiGraph& fh = c.frame.host;
  std::map<VertexId, VertexId> host_of;
  for (const auto& [v, x] : c.placement) host_of[x] = v;

  std::vector<Piece> pieces;
  for (size_t i = 0; i < c.segregation.size(); ++i) {
    const Society& s = c.segregation[i];
    int k = static_cast<int>(s.boundary.size());
    std::vector<int> pos;
    for (VertexId v : s.boundary) pos.push_back(disks[i].position(c.placement.at(v)));
    std::sort(pos.begin(), pos.end());
    int si = static_cast<int>(i);
    if (k == 2) {
      pieces.push_back({si, pos[0], pos[1]});
      if (trunk) {
        MultiGraph sg = materialize(g, s.graph);
        if (max_edge_disjoint_paths(sg, s.boundary[0], s.boundary[1], 2) >= 2) pieces.push_back({si, pos[1], pos[0]});
      }
    } else if (k == 3 || (trunk && k > 3)) {
      for (int j = 0; j < k; ++j) pieces.push_back({si, pos[j], pos[(j + 1) % k]});
    }
  }

  std::vector<Edge> edges;
  std::vector<int> signature;
  for (size_t p = 0; p < pieces.size(); ++p) {
    const Disk& d = disks[pieces[p].society];
    int len = static_cast<int>(d.order.size());
    int sign = 1;
    for (int j = pieces[p].from; j != pieces[p].to; j = (j + 1) % len)
      sign *= c.frame.signature[fh.edge_index(d.edges[j])];
    edges.push_back({static_cast<EdgeId>(p), host_of.at(d.order[pieces[p].from]), host_of.at(d.order[pieces[p].to])});
    signature.push_back(sign);
  }
  std::vector<VertexId> vs = boundary_vertices(c.segregation);
  RotationEmbedding out;
  out.host = MultiGraph(vs, edges);
  out.signature = signature;
  out.rotation.resize(vs.size());
  out.surface_genus = euler_genus(c.frame);

  for (VertexId v : vs) {
    VertexId x = c.placement.at(v);
    int xi = fh.vertex_index(x);
    const auto& rot = c.frame.rotation[xi];
    int deg = static_cast<int>(rot.size());
    // Each disk through x owns the corners after one of its two boundary
    // ends at x; its pieces go there, the one hugging that end first.
    std::vector<std::pair<int, std::vector<EdgeEnd>>> sectors;
    for (size_t i = 0; i < disks.size(); ++i) {
      const Disk& d = disks[i];
      int j = d.position(x);
      if (j < 0) continue;
      int len = static_cast<int>(d.order.size());
      EdgeId out_edge = d.edges[j], in_edge = d.edges[(j + len - 1) % len];
      EdgeEnd out_end{out_edge, end_at(fh.edge(out_edge), x)};
      EdgeEnd in_end{in_edge, 1 - end_at(fh.edge(in_edge), d.order[(j + len - 1) % len])};
      int p_out = static_cast<int>(std::find(rot.begin(), rot.end(), out_end) - rot.begin());
      int p_in = static_cast<int>(std::find(rot.begin(), rot.end(), in_end) - rot.begin());
      bool out_first = d.face_in[fr.corner_face[xi][p_out]];
      int start = out_first ? p_out : p_in;
      std::vector<EdgeEnd> first, second;
      for (size_t p = 0; p < pieces.size(); ++p) {
        if (pieces[p].society != static_cast<int>(i)) continue;
        // A piece leaving x runs along the out edge; one arriving, along the in edge.
        if (pieces[p].from == j) (out_first ? first : second).push_back({static_cast<EdgeId>(p), 0});
        if (pieces[p].to == j) (out_first ? second : first).push_back({static_cast<EdgeId>(p), 1});
      }
      first.insert(first.end(), second.begin(), second.end());
      if (!first.empty()) sectors.emplace_back(start % std::max(deg, 1), first);
    }
    std::sort(sectors.begin(), sectors.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    auto& r = out.rotation[out.host.vertex_index(v)];
    for (const auto& [start, ends] : sectors) r.insert(r.end(), ends.begin(), ends.end());
  }
  validate_embedding(out);
  return out;
}

}  // namespace

std::vector<VertexId> boundary_vertices(const Segregation& seg) {
  std::vector<VertexId> all;
  for (const Society& s : seg) all.insert(all.end(), s.boundary.begin(), s.boundary.end());
  return sorted_ids(all);
}

CheckReport is_arrangement(const MultiGraph& g, const ArrangementCertificate& cert) {
  return check_arrangement(g, cert, true, false, nullptr);
}

CheckReport is_proper_arrangement(const MultiGraph& g, const ArrangementCertificate& cert) {
  return check_arrangement(g, cert, true, true, nullptr);
}

RotationEmbedding build_skeleton(const MultiGraph& g, const ArrangementCertificate& cert) {
  return draw_pieces(g, cert, false);
}

RotationEmbedding build_trunk(const MultiGraph& g, const ArrangementCertificate& cert) {
  return draw_pieces(g, cert, true);
}

bool is_weakly_subcubic(const MultiGraph& g) {
  return std::all_of(g.vertices().begin(), g.vertices().end(),
                     [&](VertexId v) { return g.neighbors(v).size() <= 3; });
}

std::vector<std::string> Verdict::failed() const {
  std::vector<std::string> out;
  for (const ClauseResult& c : clauses)
    if (!c.ok) out.push_back(c.name);
  return out;
}

Verdict check_outcome(const MultiGraph& g, const Tangle& t, const MultiGraph& h, const OutcomeCertificate& cert,
                      const OutcomeParams& params, const Guards& guards, bool trust_tangle) {
  Verdict v;
  auto add = [&](std::string name, bool ok, std::string witness = {}) {
    v.clauses.push_back({std::move(name), ok, ok ? std::string{} : std::move(witness)});
  };
  std::vector<VertexId> z = sorted_ids(cert.z);
  detail::check_vertices(g, z);

  if (trust_tangle) {
    add("tangle", true);
    v.notes.push_back("tangle trusted, not checked");
  } else {
    TangleReport r = is_tangle(g, t, guards);
    add("tangle", r.ok, r.axiom + ": " + r.message);
  }
  int zn = static_cast<int>(z.size());
  add("z-size", zn <= params.xi, "|Z| = " + id(zn) + " > " + id(params.xi));

  MultiGraph rest = delete_vertices(g, z);
  bool reduced = zn < t.order;
  Tangle tz = reduced ? tangle_minus(g, t, z) : Tangle{};
  std::string no_tangle = "|Z| = " + id(zn) + " is not below the tangle order " + id(t.order);
  int k = std::min(params.d, tz.order);
  auto captured = [&](VertexId x) { return reduced && k > 0 && !is_k_free_vertex(rest, tz, x, k); };
  auto first_free = [&](const std::function<bool(VertexId)>& covered) -> std::optional<VertexId> {
    for (VertexId x : rest.vertices())
      if (!covered(x) && !captured(x)) return x;
    return std::nullopt;
  };

  if (cert.variant == OutcomeCertificate::Variant::captured) {
    auto free = first_free([](VertexId) { return false; });
    add("capture", reduced && !free, reduced ? "vertex " + id(free.value_or(-1)) + " is " + id(params.d) + "-free"
                                             : no_tangle);
  } else {
    const ArrangementCertificate& a = cert.arrangement;
    const Segregation& seg = a.segregation;
    std::vector<int> vortices = cert.vortices;
    std::sort(vortices.begin(), vortices.end());
    for (int i : vortices)
      if (i < 0 || i >= static_cast<int>(seg.size())) throw InputError("vortex index " + id(i) + " out of range");
    if (std::adjacent_find(vortices.begin(), vortices.end()) != vortices.end())
      throw InputError("vortex index listed twice");
    for (int i : cert.chosen)
      if (!std::binary_search(vortices.begin(), vortices.end(), i))
        throw InputError("chosen society " + id(i) + " is not a vortex");

    CheckReport sr = is_segregation(rest, seg);
    add("segregation", sr.ok, sr.clause + ": " + sr.message);
    if (!reduced) {
      add("central", false, no_tangle);
    } else {
      CentralityReport cr = sr.ok ? is_T_central(rest, seg, tz) : CentralityReport{};
      add("central", cr.ok, cr.message);
    }
    std::string big;
    for (size_t i = 0; i < seg.size(); ++i)
      if (!std::binary_search(vortices.begin(), vortices.end(), static_cast<int>(i)) && seg[i].boundary.size() > 3)
        big = "society " + id(static_cast<int>(i)) + " has " + id(static_cast<int>(seg[i].boundary.size())) +
              " boundary vertices";
    add("small-boundary", big.empty(), big);
    add("vortex-count", static_cast<int>(vortices.size()) <= params.kappa,
        id(static_cast<int>(vortices.size())) + " vortices > " + id(params.kappa));
    std::string deep;
    for (int i : vortices) {
      int depth = vortex_depth(rest, seg[i]);
      if (depth > params.rho && deep.empty())
        deep = "society " + id(i) + " has depth " + id(depth) + " > " + id(params.rho);
    }
    add("vortex-depth", deep.empty(), deep);
    CheckReport ar = check_arrangement(rest, a, false, true, nullptr);
    add("arrangement", ar.ok, ar.clause + ": " + ar.message);
    int frame_genus = euler_genus(a.frame);
    add("genus", frame_genus <= params.genus, "frame Euler genus " + id(frame_genus) + " > " + id(params.genus));

    int regions = mf(h, frame_genus, guards);
    if (cert.drawing == OutcomeCertificate::Drawing::impossible) {
      add("not-drawable", regions == kInfinity, "the pattern embeds in the frame's surface");
    } else {
      add("mf", regions != kInfinity && regions >= 2,
          regions == kInfinity ? "the pattern does not embed" : "mf = " + id(regions));
      int chosen = static_cast<int>(cert.chosen.size());
      add("chosen-count", regions == kInfinity || chosen <= regions - 1,
          id(chosen) + " chosen vortices > mf - 1 = " + id(regions - 1));
      auto inside = [&](VertexId x) {
        return std::any_of(cert.chosen.begin(), cert.chosen.end(), [&](int i) {
          const Society& s = seg[i];
          return contains(s.graph.vertices, x) && std::find(s.boundary.begin(), s.boundary.end(), x) == s.boundary.end();
        });
      };
      auto free = first_free(inside);
      add("coverage", reduced && !free,
          reduced ? "vertex " + id(free.value_or(-1)) + " is free and outside the chosen vortices" : no_tangle);
    }
  }
  v.accepted = std::all_of(v.clauses.begin(), v.clauses.end(), [](const ClauseResult& c) { return c.ok; });
  return v;
}

}  // namespace tk
