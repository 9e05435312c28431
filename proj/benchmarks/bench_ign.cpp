#include <benchmark/benchmark.h>

#include "sc/graphon.hpp"
#include "sc/ign.hpp"

namespace {

void BM_IgnForward(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const sc::IGNModel model = sc::IGNModel::random(5, 16, 1, 8, 23);
  const sc::SymmetricMatrix input = sc::discretize_graphon(sc::Graphon::lipschitz(), n);
  for (auto _ : state) {
    auto out = sc::ign_forward(model, {input.as_matrix()});
    benchmark::DoNotOptimize(out.data());
  }
  state.SetComplexityN(n);
}

void BM_EstimateProbabilities(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  sc::Rng rng(31);
  const sc::SampleScheme scheme{sc::SampleScheme::Grid::Random,
                                sc::SampleScheme::Observation::Bernoulli};
  const sc::SymmetricMatrix a = sc::sample_adjacency(sc::Graphon::constant(0.2), n, scheme, rng);
  for (auto _ : state) {
    auto est = sc::estimate_probabilities(a);
    benchmark::DoNotOptimize(est.as_matrix().data().data());
  }
  state.SetComplexityN(n);
}

}  // namespace

BENCHMARK(BM_IgnForward)->Arg(64)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond)->Complexity();
BENCHMARK(BM_EstimateProbabilities)->Arg(128)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond)->Complexity();
