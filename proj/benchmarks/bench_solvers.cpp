#include <benchmark/benchmark.h>

#include <random>

#include "crownlab/battery.hpp"
#include "crownlab/canonical.hpp"
#include "crownlab/reversibility.hpp"
#include "crownlab/solvers.hpp"
#include "crownlab/transforms.hpp"

using namespace crownlab;

namespace {

Limits open_limits() {
  Limits l;
  l.override_guards = true;
  return l;
}

void crown_args(benchmark::internal::Benchmark* b, std::initializer_list<std::pair<int, int>> cells) {
  for (auto [n, k] : cells) b->Args({n, k});
  b->ArgNames({"n", "k"});
}

void BM_BuildGraph(benchmark::State& state) {
  const Crown c(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(CritGraph(c));
}
BENCHMARK(BM_BuildGraph)->Apply([](auto* b) { crown_args(b, {{6, 4}, {10, 8}, {20, 15}}); });

void BM_MaxIndependentSet(benchmark::State& state) {
  const CritGraph g(Crown(static_cast<int>(state.range(0)), static_cast<int>(state.range(1))));
  for (auto _ : state) benchmark::DoNotOptimize(max_independent_set(g, open_limits()));
}
BENCHMARK(BM_MaxIndependentSet)->Apply([](auto* b) { crown_args(b, {{5, 3}, {6, 4}, {8, 6}}); })
    ->Unit(benchmark::kMillisecond);

void BM_ChromaticNumber(benchmark::State& state) {
  const CritGraph g(Crown(static_cast<int>(state.range(0)), static_cast<int>(state.range(1))));
  for (auto _ : state) benchmark::DoNotOptimize(chromatic_number(g, open_limits()));
}
BENCHMARK(BM_ChromaticNumber)->Apply([](auto* b) { crown_args(b, {{5, 3}, {6, 4}, {8, 6}}); })
    ->Unit(benchmark::kMillisecond);

void BM_MaxReversible(benchmark::State& state) {
  const Crown c(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(max_reversible_set(c, open_limits()));
}
BENCHMARK(BM_MaxReversible)->Apply([](auto* b) { crown_args(b, {{4, 3}, {5, 4}, {6, 5}}); })
    ->Unit(benchmark::kMillisecond);

void BM_MaxInr(benchmark::State& state) {
  const Crown c(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(max_inr_set(c, open_limits()));
}
BENCHMARK(BM_MaxInr)->Apply([](auto* b) { crown_args(b, {{4, 3}, {3, 4}, {5, 4}}); })
    ->Unit(benchmark::kMillisecond);

void BM_ReversibleCover(benchmark::State& state) {
  const Crown c(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(min_reversible_cover(c, open_limits()));
}
BENCHMARK(BM_ReversibleCover)->Apply([](auto* b) { crown_args(b, {{4, 1}, {4, 2}, {5, 3}}); })
    ->Unit(benchmark::kMillisecond);

void BM_CanonicalEnumeration(benchmark::State& state) {
  const Crown c(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) {
    std::size_t count = 0;
    for_each_canonical(c, [&](const std::vector<int>&, const PairSet&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_CanonicalEnumeration)->Apply([](auto* b) { crown_args(b, {{4, 3}, {6, 6}, {8, 8}}); });

void BM_ReversibilityCertificate(benchmark::State& state) {
  const Crown c(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  const CritGraph g(c);
  std::mt19937_64 rng(7);
  std::vector<PairSet> sets;
  for (int i = 0; i < 64; ++i) sets.push_back(random_independent_set(g, rng));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(reversibility_certificate(sets[i++ % sets.size()]));
}
BENCHMARK(BM_ReversibilityCertificate)->Apply([](auto* b) { crown_args(b, {{5, 4}, {10, 8}}); });

void BM_TransformStep(benchmark::State& state) {
  const Crown c(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  const CritGraph g(c);
  std::mt19937_64 rng(11);
  const PairSet s = random_independent_set(g, rng);
  int i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(transform(s, TransformKind::DFEL, 1 + i++ % c.circle()));
}
BENCHMARK(BM_TransformStep)->Apply([](auto* b) { crown_args(b, {{5, 4}, {10, 8}}); });

}  // namespace

BENCHMARK_MAIN();
