#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "tanglekit/json.hpp"

using namespace tk;

namespace {

template <class T>
void round_trips(const T& value) {
  json first = value;
  T back = parse_json_as<T>(first.dump());
  json second = back;
  CHECK(first == second);
}

Guards roomy() {
  Guards g;
  g.override_vertex_caps = true;
  return g;
}

}  // namespace

TEST_CASE("graph JSON keeps ids, loops and parallel edges") {
  MultiGraph g({2, 5, 9}, {{4, 2, 5}, {7, 2, 5}, {8, 9, 9}});
  json j = g;
  CHECK(j["vertices"] == json::array({2, 5, 9}));
  CHECK(j["edges"][2] == json::array({8, 9, 9}));
  CHECK(parse_json_as<MultiGraph>(j.dump()) == g);
  round_trips(g);

  std::mt19937 rng(5);
  for (int i = 0; i < 20; ++i) round_trips(fixture::random_graph(rng, 8, 0.4));
}

TEST_CASE("embedding JSON uses rotation and signature objects keyed by id") {
  RotationEmbedding e = default_embedding(complete_graph(4));
  e.signature[2] = -1;
  json j = e;
  CHECK(j["rotation"].contains("0"));
  CHECK(j["rotation"]["0"][0].size() == 2);
  CHECK(j["signature"]["2"] == -1);
  CHECK_FALSE(j.contains("surface_genus"));
  RotationEmbedding back = parse_json_as<RotationEmbedding>(j.dump());
  CHECK(back.rotation == e.rotation);
  CHECK(back.signature == e.signature);
  CHECK(trace_faces(back).size() == trace_faces(e).size());

  e.surface_genus = 2;
  round_trips(e);

  // signatures left out default to +1
  j.erase("signature");
  CHECK(parse_json_as<RotationEmbedding>(j.dump()).signature == std::vector<int>(6, 1));

  json broken = json(e);
  broken["rotation"]["0"].erase(0);
  CHECK_THROWS_AS(parse_json_as<RotationEmbedding>(broken.dump()), InputError);
  broken = json(e);
  broken["rotation"]["x"] = json::array();
  CHECK_THROWS_AS(parse_json_as<RotationEmbedding>(broken.dump()), InputError);
}

TEST_CASE("tangle, models and spiders round-trip") {
  MultiGraph g = grid_graph(3, 3);
  std::vector<Tangle> ts = enumerate_tangles(g, 3, roomy());
  REQUIRE(!ts.empty());
  round_trips(ts.front());
  Tangle back = parse_json_as<Tangle>(json(ts.front()).dump());
  CHECK(back == ts.front());

  auto minor = find_minor(petersen_graph(), complete_graph(5));
  REQUIRE(minor);
  round_trips(*minor);
  CHECK(parse_json_as<MinorModel>(json(*minor).dump()) == *minor);

  auto sub = find_subdivision(complete_graph(5), cycle_graph(5));
  REQUIRE(sub);
  round_trips(*sub);
  CHECK(parse_json_as<SubdivisionModel>(json(*sub).dump()) == *sub);

  std::vector<VertexId> x{4}, y{0, 2, 6, 8};
  auto spider = find_spider(g, x, y, 3);
  REQUIRE(spider);
  round_trips(*spider);
}

TEST_CASE("society, verdict and certificate JSON") {
  Society s{{{0, 1, 2}, {0, 1}}, {2, 0, 1}};
  json j = s;
  CHECK(j == json::parse(R"({"vertices":[0,1,2],"edges":[0,1],"boundary":[2,0,1]})"));
  round_trips(s);
  CHECK(parse_json_as<Society>(j.dump()) == s);

  Verdict v;
  v.accepted = false;
  v.clauses = {{"tangle", true, ""}, {"capture", false, "vertex 3 is 4-free"}};
  json vj = v;
  CHECK(vj["clauses"][0].size() == 2);
  CHECK(vj["clauses"][1]["witness"] == "vertex 3 is 4-free");
  CHECK_FALSE(vj.contains("notes"));
  round_trips(v);

  OutcomeCertificate captured;
  captured.z = {4, 1};
  round_trips(captured);
  CHECK(json(captured)["variant"] == "captured");

  OutcomeCertificate arranged;
  arranged.variant = OutcomeCertificate::Variant::arranged;
  arranged.arrangement.segregation = {s};
  arranged.arrangement.frame = default_embedding(cycle_graph(3));
  arranged.arrangement.placement = {{0, 0}, {1, 1}, {2, 2}};
  arranged.arrangement.disks = {{{0, 1, 2}, 0}};
  arranged.vortices = {0};
  arranged.drawing = OutcomeCertificate::Drawing::few_regions;
  arranged.chosen = {0};
  round_trips(arranged);
  CHECK(json(arranged)["arrangement"]["placement"]["2"] == 2);

  OutcomeParams p{3, 1, 2, 4, 2};
  round_trips(p);
  OutcomeParams partial = parse_json_as<OutcomeParams>(R"({"rho": 7})");
  CHECK(partial.rho == 7);
  CHECK(partial.d == OutcomeParams{}.d);

  CHECK_THROWS_AS(parse_json_as<OutcomeCertificate>(R"({"variant":"other"})"), InputError);
  CHECK_THROWS_AS(parse_json_as<Society>(R"({"vertices":[0]})"), InputError);
  CHECK_THROWS_AS(parse_json_as<Society>("{"), InputError);
}

TEST_CASE("metric CSV lists each unordered pair once") {
  AtomMetric m;
  m.theta = 3;
  m.atoms = {{Atom::Kind::vertex, 0}, {Atom::Kind::edge, 4}, {Atom::Kind::region, 1}};
  m.table = {{0, 1, 2}, {1, 0, 1}, {2, 1, 0}};
  std::string csv = metric_csv(m);
  CHECK(csv ==
        "a_kind,a_id,b_kind,b_id,distance\n"
        "vertex,0,vertex,0,0\nvertex,0,edge,4,1\nvertex,0,region,1,2\n"
        "edge,4,edge,4,0\nedge,4,region,1,1\n"
        "region,1,region,1,0\n");
  json j = m;
  CHECK(j["atoms"][1] == json::parse(R"({"kind":"edge","id":4})"));
  CHECK(parse_json_as<Atom>(j["atoms"][2].dump()) == m.atoms[2]);
}
