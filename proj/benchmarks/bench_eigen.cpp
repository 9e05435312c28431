#include <benchmark/benchmark.h>

#include "sc/eigen.hpp"
#include "sc/graph.hpp"
#include "sc/laplacian.hpp"
#include "sc/rng.hpp"

namespace {

sc::SymmetricMatrix random_symmetric(int n, std::uint64_t seed) {
  sc::Rng rng(seed);
  sc::SymmetricMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) m.set(i, j, rng.normal());
  return m;
}

void BM_JacobiEig(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const sc::SymmetricMatrix m = random_symmetric(n, 7);
  for (auto _ : state) {
    auto eig = sc::sym_eig(m);
    benchmark::DoNotOptimize(eig.values.data());
  }
  state.SetComplexityN(n);
}

void BM_Laplacian(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  sc::Rng rng(11);
  std::vector<sc::Edge> edges;
  for (int v = 1; v < n; ++v)
    edges.push_back({static_cast<int>(rng.uniform_int(0, v - 1)), v, 1.0});
  const sc::Graph g(n, std::move(edges));
  for (auto _ : state) {
    auto l = sc::combinatorial_laplacian(g);
    benchmark::DoNotOptimize(l.as_matrix().data().data());
  }
}

}  // namespace

BENCHMARK(BM_JacobiEig)->Arg(32)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond)->Complexity();
BENCHMARK(BM_Laplacian)->Arg(256)->Arg(1024)->Arg(4096);

BENCHMARK_MAIN();
