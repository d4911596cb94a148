#include <benchmark/benchmark.h>

#include "crgp/analytic.hpp"
#include "crgp/class_tests.hpp"
#include "crgp/edge_stream.hpp"
#include "crgp/local_graph.hpp"
#include "crgp/process.hpp"

namespace {

void BM_Beta(benchmark::State& state) {
  double c = 1.01;
  for (auto _ : state) {
    benchmark::DoNotOptimize(crgp::analytic::beta(c));
    c = c > 40 ? 1.01 : c + 0.37;
  }
}
BENCHMARK(BM_Beta);

void BM_FInverse(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(crgp::analytic::f_inverse(1.5));
}
BENCHMARK(BM_FInverse);

// Triangulated grid: planar, 3 edges per vertex.
crgp::LocalGraph grid(int side) {
  crgp::LocalGraph g(side * side);
  auto id = [side](int r, int c) { return r * side + c; };
  for (int r = 0; r < side; ++r) {
    for (int c = 0; c < side; ++c) {
      if (c + 1 < side) g.add_edge(id(r, c), id(r, c + 1));
      if (r + 1 < side) g.add_edge(id(r, c), id(r + 1, c));
      if (r + 1 < side && c + 1 < side) g.add_edge(id(r, c), id(r + 1, c + 1));
    }
  }
  g.finalize();
  return g;
}

void BM_PlanarityGrid(benchmark::State& state) {
  const auto g = grid(static_cast<int>(state.range(0)));
  crgp::PlanarityTester tester;
  for (auto _ : state) benchmark::DoNotOptimize(tester.is_planar(g));
  state.SetItemsProcessed(state.iterations() * g.size());
}
BENCHMARK(BM_PlanarityGrid)->Arg(10)->Arg(100)->Arg(300);

void BM_EdgeStreamLazy(benchmark::State& state) {
  const auto n = static_cast<crgp::Vertex>(state.range(0));
  for (auto _ : state) {
    crgp::EdgeStream stream(n, 7, crgp::StreamMode::lazy);
    for (crgp::Vertex i = 0; i < n; ++i) benchmark::DoNotOptimize(stream.next());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EdgeStreamLazy)->Arg(10000)->Arg(100000);

void BM_ProcessPlanar(benchmark::State& state) {
  crgp::ProcessConfig cfg;
  cfg.n = static_cast<crgp::Vertex>(state.range(0));
  cfg.cls = crgp::GraphClass::planar;
  cfg.stop = crgp::StopRule::at_step(static_cast<std::uint64_t>(state.range(1)) * cfg.n / 2);
  std::uint64_t seed = 1;
  for (auto _ : state) {
    cfg.seed = seed++;
    benchmark::DoNotOptimize(crgp::run(cfg).accepted);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(cfg.stop.value));
}
BENCHMARK(BM_ProcessPlanar)->Args({10000, 2})->Args({10000, 4})->Args({100000, 3})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
