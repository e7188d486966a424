#include <doctest.h>

#include <algorithm>
#include <optional>

#include "oracles.hpp"
#include "tanglekit/embedding.hpp"
#include "tanglekit/radial.hpp"

using namespace tk;

namespace {

struct Fixture {
  MultiGraph g;
  RotationEmbedding e;
  Tangle t;
};

Guards roomy() {
  Guards g;
  g.override_vertex_caps = true;
  return g;
}

RotationEmbedding plane(const MultiGraph& g) {
  std::optional<RotationEmbedding> first;
  for_each_embedding(g, 0, roomy(), [&](const RotationEmbedding& e) {
    first = e;
    return false;
  });
  REQUIRE(first);
  return *first;
}

Fixture grid(int rows, int cols, int theta) {
  MultiGraph g = grid_graph(rows, cols);
  auto ts = enumerate_tangles(g, theta, roomy());
  REQUIRE(ts.size() == 1);
  return {g, plane(g), ts.front()};
}

std::vector<Fixture> grids() {
  return {grid(2, 2, 2), grid(2, 3, 2), grid(3, 3, 2), grid(3, 3, 3), grid(3, 4, 3), grid(4, 4, 3), grid(4, 4, 4)};
}

bool contains(const SubgraphRef& big, const SubgraphRef& small) {
  return std::includes(big.vertices.begin(), big.vertices.end(), small.vertices.begin(), small.vertices.end()) &&
         std::includes(big.edges.begin(), big.edges.end(), small.edges.begin(), small.edges.end());
}

int face_with_length(const RotationEmbedding& e, int len, int skip = -1) {
  auto faces = trace_faces(e);
  for (int i = 0; i < static_cast<int>(faces.size()); ++i)
    if (i != skip && faces[i].length() == len) return i;
  return -1;
}

}  // namespace

TEST_CASE("grid drawings are respectful") {
  for (const Fixture& f : grids()) {
    RespectReport r = is_respectful(f.e, f.t, roomy());
    CHECK(r.ok);
    CHECK(r.message.empty());
  }
}

TEST_CASE("order-1 tangles are respected vacuously") {
  MultiGraph g = grid_graph(3, 3);
  for (const Tangle& t : enumerate_tangles(g, 1, roomy())) {
    RespectReport r = is_respectful(plane(g), t);
    CHECK(r.ok);
    CHECK(r.inside.empty());
  }
}

TEST_CASE("every tangle of a small plane drawing is respectful") {
  for (int n = 3; n <= 5; ++n)
    for (const MultiGraph& g : oracle::connected_graphs(n)) {
      if (enumerate_embeddings(g, 0).empty()) continue;
      RotationEmbedding e = plane(g);
      for (int theta = 2; theta <= 3; ++theta)
        for (const Tangle& t : enumerate_tangles(g, theta)) CHECK(is_respectful(e, t).ok);
    }
}

TEST_CASE("a one-sided radial cycle breaks respectfulness") {
  MultiGraph tri = cycle_graph(3);
  auto ts = enumerate_tangles(tri, 2);
  REQUIRE_FALSE(ts.empty());
  CHECK(is_respectful(default_embedding(tri), ts.front()).ok);

  RotationEmbedding twisted = default_embedding(tri);
  twisted.signature[0] = -1;
  RespectReport r = is_respectful(twisted, ts.front());
  CHECK_FALSE(r.ok);
  CHECK(r.cycle.size() == 2);
  CHECK_THROWS_AS(atom_metric(twisted, ts.front()), PreconditionError);
}

TEST_CASE("the chosen inside of a short cycle around an edge is that edge") {
  Fixture f = grid(3, 3, 3);
  RespectReport r = is_respectful(f.e, f.t);
  REQUIRE(r.ok);
  int small = 0;
  for (const auto& [cycle, atoms] : r.inside) {
    if (cycle.size() != 4) continue;
    int edges = static_cast<int>(std::count_if(atoms.begin(), atoms.end(),
                                                [](const Atom& a) { return a.kind == Atom::Kind::edge; }));
    if (edges == 1) ++small;
  }
  // Each grid edge lies between two distinct faces, giving one such cycle.
  CHECK(small == f.g.edge_count());
}

TEST_CASE("metric examples") {
  Fixture f = grid(4, 4, 3);
  AtomMetric m = atom_metric(f.e, f.t);
  for (const Atom& a : m.atoms) CHECK(m.at(a, a) == 0);
  auto faces = trace_faces(f.e);
  for (int fi = 0; fi < static_cast<int>(faces.size()); ++fi)
    for (VertexId v : faces[fi].vertices) CHECK(m.at({Atom::Kind::vertex, v}, {Atom::Kind::region, fi}) == 1);
  CHECK(m.at({Atom::Kind::vertex, 0}, {Atom::Kind::vertex, 15}) == 2);
  CHECK(m.at({Atom::Kind::vertex, 0}, {Atom::Kind::vertex, 10}) == 3);
  CHECK(m.uncovered.empty());
  CHECK_THROWS_AS(m.index({Atom::Kind::vertex, 99}), InputError);
}

TEST_CASE("the metric axioms hold on grid drawings") {
  for (const Fixture& f : grids()) {
    AtomMetric m = atom_metric(f.e, f.t, roomy());
    int n = static_cast<int>(m.atoms.size());
    for (int i = 0; i < n; ++i) {
      CHECK(m.table[i][i] == 0);
      for (int j = 0; j < n; ++j) {
        CHECK(m.table[i][j] == m.table[j][i]);
        CHECK(m.table[i][j] >= 0);
        CHECK(m.table[i][j] <= f.t.order);
        if (i != j) CHECK(m.table[i][j] > 0);
        for (int k = 0; k < n; ++k) CHECK(m.table[i][k] <= m.table[i][j] + m.table[j][k]);
      }
    }
  }
}

TEST_CASE("distance within a minimal small side is at most its order") {
  for (const Fixture& f : grids()) {
    AtomMetric m = atom_metric(f.e, f.t, roomy());
    for (VertexId x : f.g.vertices()) {
      std::vector<const Separation*> holding;
      for (const Separation& s : f.t.members)
        if (std::binary_search(s.a.vertices.begin(), s.a.vertices.end(), x) &&
            !std::binary_search(s.b.vertices.begin(), s.b.vertices.end(), x))
          holding.push_back(&s);
      for (const Separation* s : holding) {
        bool minimal = std::none_of(holding.begin(), holding.end(), [&](const Separation* o) {
          return o != s && contains(s->a, o->a) && !(o->a == s->a);
        });
        if (!minimal) continue;
        for (VertexId y : s->a.vertices)
          CHECK(m.at({Atom::Kind::vertex, x}, {Atom::Kind::vertex, y}) <= s->order());
      }
    }
  }
}

TEST_CASE("every atom has an edge at distance θ") {
  for (const Fixture& f : grids()) {
    if (f.t.order < 2) continue;
    AtomMetric m = atom_metric(f.e, f.t, roomy());
    for (const Atom& c : m.atoms) {
      bool far = false;
      for (const Edge& e : f.g.edges()) far = far || m.at(c, {Atom::Kind::edge, e.id}) == f.t.order;
      CHECK_MESSAGE(far, to_string(c));
    }
  }
}

TEST_CASE("lambda zones") {
  Fixture f = grid(4, 4, 4);
  AtomMetric m = atom_metric(f.e, f.t, roomy());
  auto faces = trace_faces(f.e);
  int inner = face_with_length(f.e, 4);
  REQUIRE(inner >= 0);
  int other = face_with_length(f.e, 4, inner);
  ZoneWitness around{faces[inner].edges, inner};
  Atom region{Atom::Kind::region, inner};

  CHECK(is_lambda_zone(f.e, m, region, around, 0).clause == "distance");
  CHECK(is_lambda_zone(f.e, m, region, around, 2).ok);

  ZoneWitness rest{faces[inner].edges, other};
  CHECK(is_lambda_zone(f.e, m, {Atom::Kind::region, other}, rest, 1).clause == "distance");
  CHECK(is_lambda_zone(f.e, m, region, rest, 4).clause == "contains");

  Atom edge{Atom::Kind::edge, faces[inner].edges[0]};
  CHECK(is_lambda_zone(f.e, m, edge, around, 1).clause == "edge-lambda");
  CHECK(is_lambda_zone(f.e, m, edge, around, 2).clause == "contains");

  ZoneWitness broken{{faces[inner].edges[0], faces[inner].edges[1]}, inner};
  CHECK_THROWS_AS(is_lambda_zone(f.e, m, region, broken, 2), InputError);
  ZoneWitness nowhere{faces[inner].edges, 999};
  CHECK_THROWS_AS(is_lambda_zone(f.e, m, region, nowhere, 2), InputError);
}

TEST_CASE("guards bound the walk length") {
  Fixture f = grid(3, 3, 3);
  Guards tight;
  tight.max_metric_walk_length = 2;
  CHECK_THROWS_AS(atom_metric(f.e, f.t, tight), GuardError);
}
