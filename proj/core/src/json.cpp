#include "tanglekit/json.hpp"

#include <algorithm>
#include <sstream>

namespace tk {

namespace {

int key_id(const std::string& key) {
  size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(key, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != key.size()) throw InputError("bad id key \"" + key + "\"");
  return v;
}

template <class V>
json keyed(const std::map<int, V>& m) {
  json o = json::object();
  for (const auto& [k, v] : m) o[std::to_string(k)] = v;
  return o;
}

template <class V>
std::map<int, V> unkeyed(const json& o) {
  if (!o.is_object()) throw InputError("expected an object keyed by id");
  std::map<int, V> out;
  for (const auto& [k, v] : o.items()) out[key_id(k)] = v.template get<V>();
  return out;
}

template <class T>
void optional_field(const json& j, const char* name, T& out) {
  if (auto it = j.find(name); it != j.end()) it->get_to(out);
}

const char* kind_name(Atom::Kind k) {
  return k == Atom::Kind::vertex ? "vertex" : k == Atom::Kind::edge ? "edge" : "region";
}

}  // namespace

void to_json(json& j, const MultiGraph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.id, e.u, e.v});
  j = {{"vertices", g.vertices()}, {"edges", edges}};
}

void from_json(const json& j, MultiGraph& g) {
  std::vector<Edge> edges;
  for (const json& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 3) throw InputError("an edge is written [id, u, v]");
    edges.push_back({e[0].get<EdgeId>(), e[1].get<VertexId>(), e[2].get<VertexId>()});
  }
  g = MultiGraph(j.at("vertices").get<std::vector<VertexId>>(), std::move(edges));
}

void to_json(json& j, const SubgraphRef& r) { j = {{"vertices", r.vertices}, {"edges", r.edges}}; }

void from_json(const json& j, SubgraphRef& r) {
  j.at("vertices").get_to(r.vertices);
  r.edges.clear();
  optional_field(j, "edges", r.edges);
  std::sort(r.vertices.begin(), r.vertices.end());
  std::sort(r.edges.begin(), r.edges.end());
}

void to_json(json& j, const Path& p) { j = {{"vertices", p.vertices}, {"edges", p.edges}}; }

void from_json(const json& j, Path& p) {
  j.at("vertices").get_to(p.vertices);
  j.at("edges").get_to(p.edges);
}

void to_json(json& j, const Separation& s) { j = {{"a", s.a}, {"b", s.b}, {"order", s.order()}}; }

void from_json(const json& j, Separation& s) {
  j.at("a").get_to(s.a);
  j.at("b").get_to(s.b);
}

void to_json(json& j, const Tangle& t) { j = {{"order", t.order}, {"members", t.members}}; }

void from_json(const json& j, Tangle& t) {
  j.at("order").get_to(t.order);
  j.at("members").get_to(t.members);
  std::sort(t.members.begin(), t.members.end());
}

void to_json(json& j, const MinorModel& m) {
  j = {{"branch", keyed(m.branch)}, {"edge_image", keyed(m.edge_image)}};
}

void from_json(const json& j, MinorModel& m) {
  m.branch = unkeyed<SubgraphRef>(j.at("branch"));
  m.edge_image = unkeyed<EdgeId>(j.at("edge_image"));
}

void to_json(json& j, const SubdivisionModel& m) {
  j = {{"vertex_image", keyed(m.vertex_image)}, {"edge_path", keyed(m.edge_path)}};
}

void from_json(const json& j, SubdivisionModel& m) {
  m.vertex_image = unkeyed<VertexId>(j.at("vertex_image"));
  m.edge_path = unkeyed<Path>(j.at("edge_path"));
}

void to_json(json& j, const RotationEmbedding& e) {
  json rotation = json::object();
  for (int vi = 0; vi < e.host.vertex_count(); ++vi) {
    json ends = json::array();
    for (const EdgeEnd& x : e.rotation[vi]) ends.push_back({x.edge, x.end});
    rotation[std::to_string(e.host.vertices()[vi])] = ends;
  }
  json signature = json::object();
  for (int ei = 0; ei < e.host.edge_count(); ++ei) signature[std::to_string(e.host.edges()[ei].id)] = e.signature[ei];
  j = {{"graph", e.host}, {"rotation", rotation}, {"signature", signature}};
  if (e.surface_genus) j["surface_genus"] = *e.surface_genus;
}

void from_json(const json& j, RotationEmbedding& e) {
  j.at("graph").get_to(e.host);
  e.rotation.assign(e.host.vertex_count(), {});
  for (const auto& [k, ends] : j.at("rotation").items()) {
    int vi = e.host.vertex_index(key_id(k));
    for (const json& x : ends) {
      if (!x.is_array() || x.size() != 2) throw InputError("an edge end is written [edge, end]");
      e.rotation[vi].push_back({x[0].get<EdgeId>(), x[1].get<int>()});
    }
  }
  e.signature.assign(e.host.edge_count(), 1);
  if (auto it = j.find("signature"); it != j.end())
    for (const auto& [k, s] : it->items()) e.signature[e.host.edge_index(key_id(k))] = s.get<int>();
  e.surface_genus.reset();
  if (auto it = j.find("surface_genus"); it != j.end() && !it->is_null()) e.surface_genus = it->get<int>();
  validate_embedding(e);
}

void to_json(json& j, const Face& f) {
  j = {{"vertices", f.vertices}, {"edges", f.edges}, {"corners", f.corners}, {"length", f.length()}};
}

void to_json(json& j, const Spider& s) { j = {{"head", s.head}, {"tree", s.tree}, {"leaves", s.leaves}}; }

void from_json(const json& j, Spider& s) {
  j.at("head").get_to(s.head);
  j.at("tree").get_to(s.tree);
  j.at("leaves").get_to(s.leaves);
}

void to_json(json& j, const DichotomyResult& r) {
  if (r.variant == DichotomyResult::Variant::packing)
    j = {{"variant", "packing"}, {"packing", r.packing}};
  else
    j = {{"variant", "cover"}, {"cover", r.cover}};
  j["bound"] = r.bound;
}

void to_json(json& j, const Society& s) {
  j = {{"vertices", s.graph.vertices}, {"edges", s.graph.edges}, {"boundary", s.boundary}};
}

void from_json(const json& j, Society& s) {
  from_json(j, s.graph);
  j.at("boundary").get_to(s.boundary);
}

void to_json(json& j, const Neighborhood& n) {
  j = {{"vertices", n.graph.vertices}, {"edges", n.graph.edges}, {"outer", n.outer}, {"inner", n.inner}};
}

void from_json(const json& j, Neighborhood& n) {
  from_json(j, n.graph);
  j.at("outer").get_to(n.outer);
  j.at("inner").get_to(n.inner);
}

void to_json(json& j, const RuralWitness& w) {
  j = {{"embedding", w.embedding}, {"outer_face", w.outer_face}, {"inner_face", w.inner_face}};
}

void from_json(const json& j, RuralWitness& w) {
  j.at("embedding").get_to(w.embedding);
  j.at("outer_face").get_to(w.outer_face);
  j.at("inner_face").get_to(w.inner_face);
}

void to_json(json& j, const LinearDecomposition& d) { j = {{"bags", d.bags}, {"adhesion", d.adhesion}}; }

void from_json(const json& j, LinearDecomposition& d) {
  j.at("bags").get_to(d.bags);
  for (auto& bag : d.bags) std::sort(bag.begin(), bag.end());
  d.adhesion = j.value("adhesion", 0);
}

void to_json(json& j, const CheckReport& r) {
  j = {{"ok", r.ok}};
  if (!r.ok) {
    j["clause"] = r.clause;
    j["message"] = r.message;
  }
}

void to_json(json& j, const TangleReport& r) {
  j = {{"ok", r.ok}};
  if (!r.ok) {
    j["axiom"] = r.axiom;
    j["message"] = r.message;
    j["witness"] = r.witness;
  }
}

void to_json(json& j, const CentralityReport& r) {
  j = {{"ok", r.ok}};
  if (!r.ok) {
    j["society"] = r.society;
    j["witness"] = r.witness;
    j["message"] = r.message;
  }
}

void to_json(json& j, const DiskAssignment& d) { j = {{"boundary", d.boundary}, {"side", d.side}}; }

void from_json(const json& j, DiskAssignment& d) {
  j.at("boundary").get_to(d.boundary);
  j.at("side").get_to(d.side);
}

void to_json(json& j, const ArrangementCertificate& c) {
  j = {{"segregation", c.segregation}, {"frame", c.frame}, {"placement", keyed(c.placement)}, {"disks", c.disks}};
}

void from_json(const json& j, ArrangementCertificate& c) {
  j.at("segregation").get_to(c.segregation);
  j.at("frame").get_to(c.frame);
  c.placement = unkeyed<VertexId>(j.at("placement"));
  j.at("disks").get_to(c.disks);
}

void to_json(json& j, const OutcomeParams& p) {
  j = {{"d", p.d}, {"xi", p.xi}, {"kappa", p.kappa}, {"rho", p.rho}, {"genus", p.genus}};
}

void from_json(const json& j, OutcomeParams& p) {
  OutcomeParams defaults;
  p.d = j.value("d", defaults.d);
  p.xi = j.value("xi", defaults.xi);
  p.kappa = j.value("kappa", defaults.kappa);
  p.rho = j.value("rho", defaults.rho);
  p.genus = j.value("genus", defaults.genus);
}

void to_json(json& j, const OutcomeCertificate& c) {
  if (c.variant == OutcomeCertificate::Variant::captured) {
    j = {{"variant", "captured"}, {"z", c.z}};
    return;
  }
  j = {{"variant", "arranged"},
       {"z", c.z},
       {"arrangement", c.arrangement},
       {"vortices", c.vortices},
       {"drawing", c.drawing == OutcomeCertificate::Drawing::impossible ? "impossible" : "few_regions"},
       {"chosen", c.chosen}};
}

void from_json(const json& j, OutcomeCertificate& c) {
  std::string variant = j.at("variant").get<std::string>();
  c = {};
  optional_field(j, "z", c.z);
  if (variant == "captured") return;
  if (variant != "arranged") throw InputError("unknown outcome variant \"" + variant + "\"");
  c.variant = OutcomeCertificate::Variant::arranged;
  j.at("arrangement").get_to(c.arrangement);
  optional_field(j, "vortices", c.vortices);
  std::string drawing = j.at("drawing").get<std::string>();
  if (drawing == "few_regions")
    c.drawing = OutcomeCertificate::Drawing::few_regions;
  else if (drawing != "impossible")
    throw InputError("unknown drawing \"" + drawing + "\"");
  optional_field(j, "chosen", c.chosen);
}

void to_json(json& j, const Verdict& v) {
  json clauses = json::array();
  for (const ClauseResult& c : v.clauses) {
    json x = {{"name", c.name}, {"ok", c.ok}};
    if (!c.ok) x["witness"] = c.witness;
    clauses.push_back(x);
  }
  j = {{"accepted", v.accepted}, {"clauses", clauses}};
  if (!v.notes.empty()) j["notes"] = v.notes;
}

void from_json(const json& j, Verdict& v) {
  j.at("accepted").get_to(v.accepted);
  v.clauses.clear();
  for (const json& c : j.at("clauses")) v.clauses.push_back({c.at("name"), c.at("ok"), c.value("witness", "")});
  v.notes.clear();
  optional_field(j, "notes", v.notes);
}

void to_json(json& j, const Guards& g) {
  j = {{"max_separation_vertices", g.max_separation_vertices},
       {"max_tangle_vertices", g.max_tangle_vertices},
       {"max_separations", g.max_separations},
       {"max_subdivision_vertices", g.max_subdivision_vertices},
       {"max_minor_vertices", g.max_minor_vertices},
       {"max_spider_vertices", g.max_spider_vertices},
       {"max_embeddings", g.max_embeddings},
       {"max_metric_walk_length", g.max_metric_walk_length},
       {"override_vertex_caps", g.override_vertex_caps}};
}

void to_json(json& j, const Atom& a) { j = {{"kind", kind_name(a.kind)}, {"id", a.id}}; }

void from_json(const json& j, Atom& a) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "vertex")
    a.kind = Atom::Kind::vertex;
  else if (kind == "edge")
    a.kind = Atom::Kind::edge;
  else if (kind == "region")
    a.kind = Atom::Kind::region;
  else
    throw InputError("unknown atom kind \"" + kind + "\"");
  j.at("id").get_to(a.id);
}

void to_json(json& j, const AtomMetric& m) {
  j = {{"theta", m.theta}, {"atoms", m.atoms}, {"table", m.table}, {"uncovered", m.uncovered}};
}

void to_json(json& j, const ZoneWitness& w) { j = {{"cycle", w.cycle}, {"inside_face", w.inside_face}}; }

void from_json(const json& j, ZoneWitness& w) {
  j.at("cycle").get_to(w.cycle);
  j.at("inside_face").get_to(w.inside_face);
}

std::string metric_csv(const AtomMetric& m) {
  std::ostringstream out;
  out << "a_kind,a_id,b_kind,b_id,distance\n";
  for (size_t i = 0; i < m.atoms.size(); ++i)
    for (size_t k = i; k < m.atoms.size(); ++k)
      out << kind_name(m.atoms[i].kind) << ',' << m.atoms[i].id << ',' << kind_name(m.atoms[k].kind) << ','
          << m.atoms[k].id << ',' << m.table[i][k] << '\n';
  return out.str();
}

}  // namespace tk
