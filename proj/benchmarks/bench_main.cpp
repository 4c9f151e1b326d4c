#include <benchmark/benchmark.h>

#include "lshape/corner_fold.hpp"
#include "lshape/metrics.hpp"
#include "lshape/nodal_poly.hpp"

using namespace lshape;

static void BM_FoldClosedForm(benchmark::State& state) {
  double t = kEndpointAngle;
  const double h = (kPi - kEndpointAngle) / 4096;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fold_closed_form(t));
    t = t + h > kPi ? kEndpointAngle : t + h;
  }
}
BENCHMARK(BM_FoldClosedForm);

static void BM_FoldOracle(benchmark::State& state) {
  double t = kEndpointAngle;
  const double h = (kPi - kEndpointAngle) / 4096;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fold_oracle(t));
    t = t + h > kPi ? kEndpointAngle : t + h;
  }
}
BENCHMARK(BM_FoldOracle);

static void BM_LogAbsOmega(benchmark::State& state) {
  const NodeFamily f = build_adjusted(static_cast<int>(state.range(0)));
  const Complex z = boundary_point(0.123);
  for (auto _ : state) benchmark::DoNotOptimize(log_abs_omega(f, z));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LogAbsOmega)->RangeMultiplier(4)->Range(16, 4096)->Complexity(benchmark::oN);

static void BM_DerivativeTable(benchmark::State& state) {
  const NodeFamily f = build_adjusted(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_derivative_table(f));
}
BENCHMARK(BM_DerivativeTable)->RangeMultiplier(4)->Range(64, 4096)->Unit(benchmark::kMillisecond);

static void BM_BuildAdjusted(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_adjusted(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BuildAdjusted)->RangeMultiplier(4)->Range(64, 4096)->Unit(benchmark::kMicrosecond);

static void BM_LebesgueConstant(benchmark::State& state) {
  const NodeFamily f = build_adjusted(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lebesgue_constant(f));
}
BENCHMARK(BM_LebesgueConstant)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

static void BM_Muckenhoupt(benchmark::State& state) {
  const NodeFamily f = build_adjusted(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(muckenhoupt_constant(f, 2.0));
}
BENCHMARK(BM_Muckenhoupt)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

static void BM_MzRatio(benchmark::State& state) {
  const NodeFamily f = build_adjusted(static_cast<int>(state.range(0)));
  const DerivativeTable t = build_derivative_table(f);
  const int k = mz_index_near_min(f);
  for (auto _ : state) benchmark::DoNotOptimize(mz_ratio(f, t, 2.0, k));
}
BENCHMARK(BM_MzRatio)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
