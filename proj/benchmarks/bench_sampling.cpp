#include <benchmark/benchmark.h>

#include "fresnel/stable_sampling.hpp"

namespace {

void BM_SampleStable(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::uint64_t stream = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fresnel::sample_stable({1.5, 1.0, 0.5, 0.0}, 1.0, n, {1, stream++}));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * state.range(0));
}
BENCHMARK(BM_SampleStable)->Arg(1 << 10)->Arg(1 << 16);

void BM_SampleSubordinated(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::uint64_t stream = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fresnel::sample_subordinated({3.0, 0.5, 0.3}, 1.0, n, {2, stream++}));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * state.range(0));
}
BENCHMARK(BM_SampleSubordinated)->Arg(1 << 16);

void BM_EmpiricalCharFn(benchmark::State& state) {
  const auto x = fresnel::sample_stable({1.5, 1.0, 0.0, 0.0}, 1.0, 1 << 16, {3, 0});
  for (auto _ : state) benchmark::DoNotOptimize(fresnel::empirical_char_fn(x, 0.7));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * (1 << 16));
}
BENCHMARK(BM_EmpiricalCharFn);

}  // namespace
