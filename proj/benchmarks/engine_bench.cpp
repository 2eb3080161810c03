#include <benchmark/benchmark.h>

#include "mhg/constructions.hpp"
#include "mhg/engine.hpp"
#include "mhg/io.hpp"

namespace {

using namespace mhg;

const std::vector<std::vector<int>> kTargets = {{4, 3}, {5, 4}, {6, 5}, {6, 5, 4, 3}, {7, 5}, {8, 6, 4}, {9, 8}};

LabeledHypergraph instance(std::int64_t i) {
  return generate(validate_target(kTargets[static_cast<std::size_t>(i)], 4));
}

void BM_Generate(benchmark::State& state) {
  const auto t = validate_target(kTargets[static_cast<std::size_t>(state.range(0))], 4);
  for (auto _ : state) benchmark::DoNotOptimize(generate(t));
}
BENCHMARK(BM_Generate)->DenseRange(0, 6);

void BM_VerifyFixedOrder(benchmark::State& state) {
  const auto g = instance(state.range(0));
  std::vector<std::size_t> s(kTargets[static_cast<std::size_t>(state.range(0))].begin(),
                             kTargets[static_cast<std::size_t>(state.range(0))].end());
  for (auto _ : state) benchmark::DoNotOptimize(is_one_realization(g.graph(), s));
}
BENCHMARK(BM_VerifyFixedOrder)->DenseRange(0, 6)->Unit(benchmark::kMillisecond);

void BM_VerifySmallestDomain(benchmark::State& state) {
  const auto g = instance(state.range(0));
  std::vector<std::size_t> s(kTargets[static_cast<std::size_t>(state.range(0))].begin(),
                             kTargets[static_cast<std::size_t>(state.range(0))].end());
  SearchOptions o;
  o.branching = Branching::smallest_domain;
  for (auto _ : state) benchmark::DoNotOptimize(is_one_realization(g.graph(), s, o));
}
BENCHMARK(BM_VerifySmallestDomain)->DenseRange(0, 6)->Unit(benchmark::kMillisecond);

void BM_VerifyNoPropagation(benchmark::State& state) {
  const auto g = instance(state.range(0));
  std::vector<std::size_t> s(kTargets[static_cast<std::size_t>(state.range(0))].begin(),
                             kTargets[static_cast<std::size_t>(state.range(0))].end());
  SearchOptions o;
  o.propagate = false;
  for (auto _ : state) benchmark::DoNotOptimize(is_one_realization(g.graph(), s, o));
}
BENCHMARK(BM_VerifyNoPropagation)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_EdgelessSpectrum(benchmark::State& state) {
  const MixedHypergraph h(static_cast<std::size_t>(state.range(0)), {}, {});
  for (auto _ : state) benchmark::DoNotOptimize(chromatic_spectrum(h));
}
BENCHMARK(BM_EdgelessSpectrum)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);

void BM_BruteForceSingleEdge(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto h = MixedHypergraph::bi(n, {{0, 1, 2, 3}});
  for (auto _ : state) benchmark::DoNotOptimize(spectrum_bruteforce(h));
}
BENCHMARK(BM_BruteForceSingleEdge)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

void BM_WriteRead(benchmark::State& state) {
  const auto g = instance(6);
  for (auto _ : state) benchmark::DoNotOptimize(read_mhg(write_mhg(g)));
}
BENCHMARK(BM_WriteRead)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
