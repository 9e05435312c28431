#include <benchmark/benchmark.h>

#include "sc/coarsen.hpp"
#include "sc/generators.hpp"
#include "sc/rng.hpp"

namespace {

void BM_Coarsen(benchmark::State& state, sc::CoarsenMethod method) {
  sc::Rng gen(3);
  const sc::Graph g = sc::generate_graph(sc::GraphKind::WS, static_cast<int>(state.range(0)), gen);
  for (auto _ : state) {
    sc::Rng rng(17);
    auto cr = sc::coarsen(g, method, 0.5, rng);
    benchmark::DoNotOptimize(cr.coarse.n());
  }
}

void BM_GreedyMatching(benchmark::State& state) {
  sc::Rng gen(5);
  const sc::Graph g = sc::generate_graph(sc::GraphKind::WS, static_cast<int>(state.range(0)), gen);
  sc::Rng rng(9);
  const sc::Vector scores = sc::contraction_scores(g, sc::ScoreMethod::HeavyEdge, rng);
  for (auto _ : state) {
    auto m = sc::greedy_matching(g, scores);
    benchmark::DoNotOptimize(m.size());
  }
}

}  // namespace

BENCHMARK_CAPTURE(BM_Coarsen, heavy_edge, sc::CoarsenMethod::HeavyEdge)->Arg(512)->Arg(2048);
BENCHMARK_CAPTURE(BM_Coarsen, algebraic_distance, sc::CoarsenMethod::AlgebraicDistance)->Arg(512)->Arg(2048);
BENCHMARK_CAPTURE(BM_Coarsen, baseline, sc::CoarsenMethod::Baseline)->Arg(512)->Arg(2048);
BENCHMARK(BM_GreedyMatching)->Arg(512)->Arg(4096);
