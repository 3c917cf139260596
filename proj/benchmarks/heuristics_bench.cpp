#include <map>

#include "benchmark/benchmark.h"
#include "mdap/ap.hpp"
#include "mdap/generators.hpp"
#include "mdap/heuristics.hpp"
#include "mdap/rng.hpp"

namespace {

using namespace mdap;

const Instance& random3(int n) {
  static std::map<int, Instance> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, gen_random(3, n, 1)).first;
  return it->second;
}

template <Assignment (*Run)(const Instance&, ScanStats*)>
void BM_Heuristic(benchmark::State& state) {
  const Instance& inst = random3(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Run(inst, nullptr));
  state.SetComplexityN(state.range(0));
}

void BM_Greedy(benchmark::State& state) {
  const Instance& inst = random3(static_cast<int>(state.range(0)));
  GreedyOptions opt;
  opt.min_weight_hint = kRandomMinWeight;
  for (auto _ : state) benchmark::DoNotOptimize(greedy(inst, opt));
  state.SetComplexityN(state.range(0));
}

void BM_Rom(benchmark::State& state) {
  const Instance& inst = random3(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rom(inst));
  state.SetComplexityN(state.range(0));
}

void BM_ShiftRom(benchmark::State& state) {
  const Instance& inst = random3(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(shift_rom(inst));
  state.SetComplexityN(state.range(0));
}

void BM_PairSums(benchmark::State& state) {
  const Instance& inst = random3(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(precompute_pair_sums(inst));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * inst.num_vectors() * sizeof(Weight)));
}

void BM_SolveAp(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  SplitMix64 rng(7);
  CostMatrix m(n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) m(r, c) = static_cast<Cost>(rng.uniform(1, 1000000));
  }
  for (auto _ : state) benchmark::DoNotOptimize(solve_ap(m));
  state.SetComplexityN(n);
}

}  // namespace

BENCHMARK(BM_Heuristic<greedy_naive>)->Name("greedy_naive")->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Greedy)->Arg(20)->Arg(40)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Heuristic<max_regret_naive>)->Name("max_regret_naive")->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Heuristic<max_regret>)->Name("max_regret")->Arg(10)->Arg(20)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Rom)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond)->Complexity();
BENCHMARK(BM_ShiftRom)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PairSums)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SolveAp)->Arg(50)->Arg(100)->Arg(200)->Arg(400)->Unit(benchmark::kMicrosecond)->Complexity();

BENCHMARK_MAIN();
