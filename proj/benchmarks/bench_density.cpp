#include <benchmark/benchmark.h>

#include "fresnel/fresnel_density.hpp"
#include "fresnel/mixture_analysis.hpp"
#include "fresnel/signed_measure.hpp"
#include "fresnel/subordination.hpp"

namespace {

void BM_Density(benchmark::State& state) {
  const auto method = static_cast<fresnel::DensityMethod>(state.range(0));
  const fresnel::PseudoParams params{2.0, 0.5, 1.0};
  for (auto _ : state) benchmark::DoNotOptimize(fresnel::density(1.3, params, method));
}
BENCHMARK(BM_Density)
    ->Arg(static_cast<int>(fresnel::DensityMethod::kSeries))
    ->Arg(static_cast<int>(fresnel::DensityMethod::kAiry))
    ->Arg(static_cast<int>(fresnel::DensityMethod::kClosedForm));

void BM_WeibullRepresentation(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(fresnel::weibull_representation(1.5, {3.0, 0.4, 1.0}));
}
BENCHMARK(BM_WeibullRepresentation)->Unit(benchmark::kMicrosecond);

void BM_SubordinatedSeries(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(fresnel::subordinated_density_series(1.2, 1.0, {3.0, 0.5, 0.5}));
  }
}
BENCHMARK(BM_SubordinatedSeries)->Unit(benchmark::kMicrosecond);

void BM_SubordinatedQuadrature(benchmark::State& state) {
  const double alpha = state.range(0) / 100.0;
  const double theta = state.range(1) / 100.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fresnel::subordinated_density_quadrature(1.2, 1.0, {alpha, theta, 0.3}));
  }
}
BENCHMARK(BM_SubordinatedQuadrature)->Args({300, 50})->Args({200, 50})->Unit(benchmark::kMillisecond);

void BM_CylinderMeasure(benchmark::State& state) {
  fresnel::CylinderEvent event;
  for (int j = 0; j < state.range(0); ++j) {
    event.times.push_back(1.0 + j);
    event.boxes.push_back({-1.0 + 0.5 * j, 1.0 + 0.5 * j});
  }
  for (auto _ : state) benchmark::DoNotOptimize(fresnel::cylinder_measure(event, {2.0, 0.5}));
}
BENCHMARK(BM_CylinderMeasure)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

void BM_Classify(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(fresnel::classify(1.5, 0.3, 1.0));
}
BENCHMARK(BM_Classify)->Unit(benchmark::kMicrosecond);

}  // namespace
