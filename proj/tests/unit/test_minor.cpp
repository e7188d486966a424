#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "tanglekit/minor.hpp"

using namespace tk;
using fixture::random_graph;

namespace {

MinorModel petersen_k5() {
  MultiGraph p = petersen_graph();
  MinorModel m;
  for (VertexId i = 0; i < 5; ++i) {
    for (const Edge& e : p.edges())
      if (e.u == i && e.v == i + 5) m.branch[i] = {{i, i + 5}, {e.id}};
  }
  MultiGraph k5 = complete_graph(5);
  for (const Edge& f : k5.edges())
    for (const Edge& e : p.edges()) {
      VertexId a = e.u % 5, b = e.v % 5;
      if (e.v == e.u + 5) continue;
      if ((a == f.u && b == f.v) || (a == f.v && b == f.u)) m.edge_image[f.id] = e.id;
    }
  return m;
}

}  // namespace

TEST_CASE("verify_subdivision") {
  MultiGraph c4 = cycle_graph(4);
  CHECK(verify_subdivision(c4, c4, identity_subdivision(c4)));

  MultiGraph c6 = cycle_graph(6);
  SubdivisionModel m;
  m.vertex_image = {{0, 0}, {1, 1}, {2, 2}, {3, 4}};
  // c4 edges: 0:(0,1) 1:(1,2) 2:(2,3) 3:(3,0); c6 edges i:(i,i+1 mod 6).
  m.edge_path[0] = {{0, 1}, {0}};
  m.edge_path[1] = {{1, 2}, {1}};
  m.edge_path[2] = {{2, 3, 4}, {2, 3}};
  m.edge_path[3] = {{4, 5, 0}, {4, 5}};
  CHECK(verify_subdivision(c6, c4, m));

  SubdivisionModel clash = m;
  clash.edge_path[3] = {{4, 3, 2, 1, 0}, {3, 2, 1, 0}};
  CHECK(!verify_subdivision(c6, c4, clash));
}

TEST_CASE("find_subdivision") {
  CHECK(!find_subdivision(petersen_graph(), complete_graph(5)));
  auto k5k4 = find_subdivision(complete_graph(5), complete_graph(4));
  REQUIRE(k5k4);
  CHECK(verify_subdivision(complete_graph(5), complete_graph(4), *k5k4));
  auto k33 = find_subdivision(complete_bipartite(3, 3), complete_graph(4));
  REQUIRE(k33);
  CHECK(verify_subdivision(complete_bipartite(3, 3), complete_graph(4), *k33));
  CHECK(!find_subdivision(cycle_graph(5), complete_graph(4)));

  // Loops and parallel edges in the pattern.
  std::vector<std::pair<VertexId, VertexId>> theta{{0, 1}, {0, 1}, {0, 1}};
  MultiGraph th = MultiGraph::from_edge_pairs(2, theta);
  auto k4theta = find_subdivision(complete_graph(4), th);
  REQUIRE(k4theta);
  CHECK(verify_subdivision(complete_graph(4), th, *k4theta));
  std::vector<std::pair<VertexId, VertexId>> loop{{0, 0}};
  MultiGraph l = MultiGraph::from_edge_pairs(1, loop);
  auto c5l = find_subdivision(cycle_graph(5), l);
  REQUIRE(c5l);
  CHECK(verify_subdivision(cycle_graph(5), l, *c5l));
  CHECK(!find_subdivision(path_graph(5), l));
}

TEST_CASE("verify_minor") {
  MultiGraph k4 = complete_graph(4);
  CHECK(verify_minor(k4, k4, identity_minor(k4)));
  MinorModel overlap = identity_minor(k4);
  overlap.branch[1].vertices = {0, 1};
  overlap.branch[1].edges = {0};
  CHECK(!verify_minor(k4, k4, overlap));
  CHECK(verify_minor(petersen_graph(), complete_graph(5), petersen_k5()));
}

TEST_CASE("find_minor") {
  auto pk5 = find_minor(petersen_graph(), complete_graph(5));
  REQUIRE(pk5);
  CHECK(verify_minor(petersen_graph(), complete_graph(5), *pk5));
  CHECK(!find_minor(path_graph(6), complete_graph(3)));
  CHECK(!find_minor(star_graph(5), complete_graph(3)));
  auto k1 = find_minor(cycle_graph(4), complete_graph(1));
  REQUIRE(k1);
  CHECK(k1->branch.size() == 1);
  CHECK(!find_minor(complete_graph(4), complete_graph(5)));
  CHECK(!find_minor(complete_bipartite(3, 3), complete_graph(5)));
  CHECK(find_minor(complete_bipartite(3, 3), complete_graph(4)));
}

TEST_CASE("subdivisions are minors; degree obstruction") {
  std::mt19937 rng(41);
  for (int round = 0; round < 120; ++round) {
    MultiGraph g = random_graph(rng, 3 + static_cast<int>(rng() % 6), 0.5);
    MultiGraph h = random_graph(rng, 1 + static_cast<int>(rng() % 5), 0.5);
    auto sub = find_subdivision(g, h);
    auto min = find_minor(g, h);
    if (sub) {
      CHECK(verify_subdivision(g, h, *sub));
      CHECK(min.has_value());
    }
    if (min) CHECK(verify_minor(g, h, *min));
    if (h.max_degree() > g.max_degree()) CHECK(!sub);
  }
}
