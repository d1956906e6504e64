#include <benchmark/benchmark.h>

#include "trigdef/report.hpp"

using namespace trigdef;

namespace {

static void BM_MatrixRank(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  SplitMix64 rng(7);
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = make_rational(rng.uniform_int(-9, 9));
  for (auto _ : state) {
    benchmark::DoNotOptimize(m.rank());
  }
}
BENCHMARK(BM_MatrixRank)->Arg(10)->Arg(20)->Arg(40);

static void BM_DiscriminantSquarefree(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  const int k = maroni_range(g).front();
  const TrigonalCurve curve = random_curve(g, k, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(binary_form_analysis(curve.disc).squarefree);
  }
}
BENCHMARK(BM_DiscriminantSquarefree)->Arg(7)->Arg(10)->Arg(12);

static void BM_LambdaGcd(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  const int k = maroni_range(g).front();
  const TrigonalCurve curve = random_curve(g, k, 1);
  const auto lambda = lambda_space(curve);
  for (auto _ : state) {
    benchmark::DoNotOptimize(poly_gcd(lambda.generators));
  }
}
BENCHMARK(BM_LambdaGcd)->Arg(8)->Arg(12);

static void BM_QuadricsI2(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  const int k = maroni_range(g).front();
  const TrigonalCurve curve = random_curve(g, k, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(quadrics_I2(curve).dim);
  }
}
BENCHMARK(BM_QuadricsI2)->Arg(7)->Arg(12);

static void BM_VerifyCell(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  const int k = maroni_range(g).front();
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_theorem(g, k, 1).pass);
  }
}
BENCHMARK(BM_VerifyCell)->Arg(7)->Arg(12)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
