#include <benchmark/benchmark.h>

#include <vector>

#include "npvsched/algorithms.hpp"
#include "npvsched/generator.hpp"
#include "npvsched/oracle.hpp"

namespace {

using namespace npvsched;

std::vector<Instance> batch(int design, std::uint64_t count) {
  std::vector<Instance> out;
  for (std::uint64_t i = 0; i < count; ++i) out.push_back(generate_instance(design, 31, i));
  return out;
}

void solve_design(benchmark::State& state, Algorithm algorithm, int design) {
  const auto instances = batch(design, 64);
  std::size_t next = 0;
  std::int64_t cost = 0;
  for (auto _ : state) {
    const SolverResult r = solve(algorithm, instances[next].network);
    benchmark::DoNotOptimize(r.npv);
    cost += r.metrics.computational_cost();
    next = (next + 1) % instances.size();
  }
  state.counters["comp_cost"] =
      benchmark::Counter(static_cast<double>(cost), benchmark::Counter::kAvgIterations);
}

void BM_Oracle(benchmark::State& state) {
  FactorAssignment f;
  f.vertices = static_cast<int>(state.range(0));
  f.layers = 3;
  f.max_degree = 2;
  f.disc_rate_pct = 10;
  f.perc_neg_pct = 50;
  f.cp_mult = 1.5;
  Rng rng(5);
  const Instance inst = generate_network(f, rng);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_optimal(inst.network).npv);
}

}  // namespace

BENCHMARK_CAPTURE(solve_design, rsfb_small, Algorithm::kRsfb, 1);
BENCHMARK_CAPTURE(solve_design, saafb_small, Algorithm::kSaafb, 1);
BENCHMARK_CAPTURE(solve_design, hs_small, Algorithm::kHs, 1);
BENCHMARK_CAPTURE(solve_design, rsfb_large, Algorithm::kRsfb, 2);
BENCHMARK_CAPTURE(solve_design, saafb_large, Algorithm::kSaafb, 2);
BENCHMARK_CAPTURE(solve_design, hs_large, Algorithm::kHs, 2);
BENCHMARK_CAPTURE(solve_design, hs_bipartite, Algorithm::kHs, 3);
BENCHMARK(BM_Oracle)->Arg(6)->Arg(8)->Arg(10);

BENCHMARK_MAIN();
