#include <benchmark/benchmark.h>

#include <random>

#include "tanglekit/embedding.hpp"
#include "tanglekit/minor.hpp"
#include "tanglekit/paths.hpp"
#include "tanglekit/radial.hpp"
#include "tanglekit/spider.hpp"
#include "tanglekit/tangle.hpp"
#include "tanglekit/vortex.hpp"

using namespace tk;

namespace {

Guards roomy() {
  Guards g;
  g.override_vertex_caps = true;
  return g;
}

MultiGraph random_graph(int n, double p, unsigned seed) {
  std::mt19937 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) pairs.emplace_back(i, j);
  return MultiGraph::from_edge_pairs(n, pairs);
}

void BM_Separations(benchmark::State& state) {
  MultiGraph g = grid_graph(3, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_separations(g, 3, roomy()));
}
BENCHMARK(BM_Separations)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_TanglesOfGrid(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  MultiGraph g = grid_graph(n, n);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_tangles(g, n, roomy()));
}
BENCHMARK(BM_TanglesOfGrid)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

void BM_CliqueTangle(benchmark::State& state) {
  int k = static_cast<int>(state.range(0));
  MultiGraph g = complete_graph(k);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_tangles(g, 2 * k / 3, roomy()));
}
BENCHMARK(BM_CliqueTangle)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void BM_PetersenK5Minor(benchmark::State& state) {
  MultiGraph p = petersen_graph(), k5 = complete_graph(5);
  for (auto _ : state) benchmark::DoNotOptimize(find_minor(p, k5));
}
BENCHMARK(BM_PetersenK5Minor)->Unit(benchmark::kMillisecond);

void BM_PetersenK5Subdivision(benchmark::State& state) {
  MultiGraph p = petersen_graph(), k5 = complete_graph(5);
  for (auto _ : state) benchmark::DoNotOptimize(find_subdivision(p, k5));
}
BENCHMARK(BM_PetersenK5Subdivision)->Unit(benchmark::kMillisecond);

void BM_DisjointPaths(benchmark::State& state) {
  MultiGraph g = grid_graph(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
  int n = static_cast<int>(state.range(0));
  std::vector<VertexId> left, right;
  for (int r = 0; r < n; ++r) {
    left.push_back(r * n);
    right.push_back(r * n + n - 1);
  }
  for (auto _ : state) benchmark::DoNotOptimize(max_disjoint_paths(g, left, right));
}
BENCHMARK(BM_DisjointPaths)->RangeMultiplier(2)->Range(4, 32);

void BM_SpiderDichotomy(benchmark::State& state) {
  MultiGraph g = random_graph(static_cast<int>(state.range(0)), 0.35, 7);
  std::vector<VertexId> x, y;
  for (VertexId v : g.vertices()) (v % 3 == 0 ? x : y).push_back(v);
  for (auto _ : state) benchmark::DoNotOptimize(erdos_posa_dichotomy(g, x, y, 3, 2, roomy()));
}
BENCHMARK(BM_SpiderDichotomy)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);

void BM_VortexDepth(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  MultiGraph g = grid_graph(n, n);
  std::vector<VertexId> ring;
  for (int c = 0; c < n; ++c) ring.push_back(c);
  for (int r = 1; r < n; ++r) ring.push_back(r * n + n - 1);
  for (int c = n - 2; c >= 0; --c) ring.push_back((n - 1) * n + c);
  for (int r = n - 2; r > 0; --r) ring.push_back(r * n);
  Society s{whole(g), ring};
  for (auto _ : state) benchmark::DoNotOptimize(vortex_depth(g, s));
}
BENCHMARK(BM_VortexDepth)->DenseRange(3, 7, 2)->Unit(benchmark::kMillisecond);

void BM_Mf(benchmark::State& state) {
  MultiGraph g = grid_graph(2, static_cast<int>(state.range(0)));
  MultiGraph k = complete_graph(5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mf(g, 0, roomy()));
    benchmark::DoNotOptimize(mf(k, 1, roomy()));
  }
}
BENCHMARK(BM_Mf)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_AtomMetric(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  MultiGraph g = grid_graph(n, n);
  Tangle t = enumerate_tangles(g, 3, roomy()).front();
  RotationEmbedding e = enumerate_embeddings(g, 0, roomy()).front();
  for (auto _ : state) benchmark::DoNotOptimize(atom_metric(e, t, roomy()));
}
BENCHMARK(BM_AtomMetric)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
