#include <benchmark/benchmark.h>

#include "fresnel/special_fn.hpp"

namespace {

// Range args: alpha * 100, x * 100.
void BM_AirySeries(benchmark::State& state) {
  const fresnel::AiryOrder order(state.range(0) / 100.0);
  const double x = state.range(1) / 100.0;
  for (auto _ : state) benchmark::DoNotOptimize(fresnel::airy_series(x, order));
}
BENCHMARK(BM_AirySeries)->Args({150, -300})->Args({300, -300})->Args({300, 300})->Args({400, -400});

void BM_AiryQuadrature(benchmark::State& state) {
  const fresnel::AiryOrder order(state.range(0) / 100.0);
  const double x = state.range(1) / 100.0;
  for (auto _ : state) benchmark::DoNotOptimize(fresnel::airy_quadrature(x, order));
}
BENCHMARK(BM_AiryQuadrature)
    ->Args({150, -300})
    ->Args({200, -2000})
    ->Args({300, -300})
    ->Args({300, 300})
    ->Args({125, -800})
    ->Unit(benchmark::kMicrosecond);

// The cached coefficient table is what repeated evaluation at one order pays for.
void BM_GeneralizedAiryTable(benchmark::State& state) {
  const fresnel::GeneralizedAiry ai{fresnel::AiryOrder(2.5)};
  double x = -3.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ai(x));
    x = x > 3.0 ? -3.0 : x + 0.37;
  }
}
BENCHMARK(BM_GeneralizedAiryTable);

void BM_SubordinatorPdf(benchmark::State& state) {
  const double theta = state.range(0) / 100.0;
  for (auto _ : state) benchmark::DoNotOptimize(fresnel::stable_subordinator_pdf(0.7, 1.0, theta));
}
BENCHMARK(BM_SubordinatorPdf)->Arg(30)->Arg(50)->Arg(80);

}  // namespace
