// Parallel kernels against their serial references on the same inputs.

#include <algorithm>
#include <numeric>
#include <random>

#include <benchmark/benchmark.h>

#include "medianvote/serial.hpp"
#include "medianvote/synthesis.hpp"

namespace {

using namespace medianvote;

std::vector<LinearOrder> random_domain(int n, int m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<LinearOrder> out;
  std::vector<Alternative> r(m);
  std::iota(r.begin(), r.end(), 0);
  while (static_cast<int>(out.size()) < n) {
    std::shuffle(r.begin(), r.end(), rng);
    LinearOrder candidate(r);
    if (std::find(out.begin(), out.end(), candidate) == out.end()) out.push_back(std::move(candidate));
  }
  return out;
}

void BM_Distances(benchmark::State& state, bool parallel) {
  const Graph g = grid_graph(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(parallel ? all_pairs_distances(g) : serial::all_pairs_distances(g));
  }
}

void BM_MedianTest(benchmark::State& state, bool parallel) {
  const Graph g = grid_graph(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(parallel ? is_median_graph(g) : serial::is_median_graph(g));
  }
}

void BM_Intermediate(benchmark::State& state, bool parallel) {
  const Graph g = random_median_graph(static_cast<int>(state.range(0)), 7);
  const Profile p = synthesize_profile(g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(parallel ? is_intermediate(p, g) : serial::is_intermediate(p, g));
  }
}

void BM_NeighborGraph(benchmark::State& state, bool parallel) {
  const std::vector<LinearOrder> domain = random_domain(static_cast<int>(state.range(0)), 8, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(parallel ? build_neighbor_graph(domain) : serial::build_neighbor_graph(domain));
  }
}

}  // namespace

BENCHMARK_CAPTURE(BM_Distances, serial, false)->Arg(10)->Arg(30);
BENCHMARK_CAPTURE(BM_Distances, parallel, true)->Arg(10)->Arg(30);
BENCHMARK_CAPTURE(BM_MedianTest, serial, false)->Arg(5)->Arg(8);
BENCHMARK_CAPTURE(BM_MedianTest, parallel, true)->Arg(5)->Arg(8);
BENCHMARK_CAPTURE(BM_Intermediate, serial, false)->Arg(20)->Arg(60);
BENCHMARK_CAPTURE(BM_Intermediate, parallel, true)->Arg(20)->Arg(60);
BENCHMARK_CAPTURE(BM_NeighborGraph, serial, false)->Arg(50)->Arg(200);
BENCHMARK_CAPTURE(BM_NeighborGraph, parallel, true)->Arg(50)->Arg(200);

BENCHMARK_MAIN();
