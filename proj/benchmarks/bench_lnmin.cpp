// Microbenchmarks for the hot paths: the dual solver cold vs warm, the two
// distance-query strategies, the matching core, and feasibility projection.

#include <benchmark/benchmark.h>

#include "lnmin/experiment.hpp"
#include "lnmin/matching.hpp"
#include "lnmin/mu_bar.hpp"
#include "lnmin/rng.hpp"
#include "lnmin/steepest_descent.hpp"
#include "lnmin/vectors.hpp"

namespace {

using namespace lnmin;

MatchingInstance bench_instance(int n) {
  Rng rng(n);
  return generate_instance(n, 5, rng);
}

void BM_ColdSolve(benchmark::State& state) {
  const MatchingInstance inst = bench_instance(static_cast<int>(state.range(0)));
  const LnConvexOracle oracle = matching_dual_oracle(inst);
  const IntVec start = trivially_feasible_dual(inst);
  for (auto _ : state) {
    benchmark::DoNotOptimize(steepest_descent(oracle, start));
  }
}
BENCHMARK(BM_ColdSolve)->Arg(10)->Arg(20)->Arg(40);

void BM_WarmSolve(benchmark::State& state) {
  const MatchingInstance inst = bench_instance(static_cast<int>(state.range(0)));
  const LnConvexOracle oracle = matching_dual_oracle(inst);
  const IntVec optimum = steepest_descent(oracle, trivially_feasible_dual(inst)).minimizer;

  RealVec prediction = to_real(optimum);
  for (size_t v = 0; v < prediction.size(); ++v) {
    prediction[v] += (v % 2 == 0) ? 0.75 : -1.25;
  }
  for (auto _ : state) {
    const Projection proj = feasibility_projection(inst, prediction);
    benchmark::DoNotOptimize(steepest_descent(oracle, round_half_down(proj.point)));
  }
}
BENCHMARK(BM_WarmSolve)->Arg(10)->Arg(20)->Arg(40);

void BM_DistanceRelaxed(benchmark::State& state) {
  const MatchingInstance inst = bench_instance(static_cast<int>(state.range(0)));
  const InequalitySystem sys = dom_system(inst);
  RealVec point = to_real(trivially_feasible_dual(inst));
  for (size_t v = 0; v < point.size(); ++v) point[v] += (v % 3 == 0) ? 3.0 : -2.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mu_bar(sys, point));
  }
}
BENCHMARK(BM_DistanceRelaxed)->Arg(8)->Arg(32)->Arg(64);

void BM_DistanceGuided(benchmark::State& state) {
  const MatchingInstance inst = bench_instance(static_cast<int>(state.range(0)));
  const InequalitySystem sys = dom_system(inst);
  const RealVec witness = to_real(trivially_feasible_dual(inst));
  RealVec point = witness;
  for (size_t v = 0; v < point.size(); ++v) point[v] += (v % 3 == 0) ? 3.0 : -2.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mu_bar(sys, point, witness));
  }
}
BENCHMARK(BM_DistanceGuided)->Arg(8)->Arg(32)->Arg(64);

void BM_HopcroftKarp(benchmark::State& state) {
  const int n_left = static_cast<int>(state.range(0));
  const MatchingInstance inst = bench_instance(2 * n_left);
  std::vector<std::vector<int>> adjacency(static_cast<size_t>(n_left));
  for (const WeightedEdge& e : inst.edges()) {
    adjacency[static_cast<size_t>(e.left)].push_back(e.right - n_left);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(hopcroft_karp(n_left, n_left, adjacency));
  }
}
BENCHMARK(BM_HopcroftKarp)->Arg(16)->Arg(64)->Arg(256);

void BM_Projection(benchmark::State& state) {
  const MatchingInstance inst = bench_instance(static_cast<int>(state.range(0)));
  RealVec prediction(static_cast<size_t>(inst.n()), 0.0);
  for (size_t v = 0; v < prediction.size(); ++v) {
    prediction[v] = (v % 2 == 0) ? 1.5 : -2.5;
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(feasibility_projection(inst, prediction));
  }
}
BENCHMARK(BM_Projection)->Arg(10)->Arg(20)->Arg(40);

}  // namespace

BENCHMARK_MAIN();
