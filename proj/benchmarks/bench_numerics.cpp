#include <benchmark/benchmark.h>

#include "hyperverify/appell.hpp"
#include "hyperverify/hypergeometric.hpp"
#include "hyperverify/identity_harness.hpp"
#include "hyperverify/integrands.hpp"
#include "hyperverify/quadrature.hpp"
#include "hyperverify/special_core.hpp"

using namespace hyperverify;

static void BM_LnGammaNegative(benchmark::State& state) {
  double x = -7.9;
  for (auto _ : state) benchmark::DoNotOptimize(ln_gamma_signed(x));
}
BENCHMARK(BM_LnGammaNegative);

// Margin 0.05 forces the Richardson path.
static void BM_PfqAtOneSmallMargin(benchmark::State& state) {
  const PfqParams p{{0.9, 0.2, 1.3}, {1.15, 1.3}};
  for (auto _ : state) benchmark::DoNotOptimize(pfq_at_1(p));
}
BENCHMARK(BM_PfqAtOneSmallMargin);

static void BM_PfqAtOneBalanced4F3(benchmark::State& state) {
  const PfqParams p{{1, 0.6, 1.4, 2.1}, {1.7, 2.5, 1.3}};
  for (auto _ : state) benchmark::DoNotOptimize(pfq_at_1(p));
}
BENCHMARK(BM_PfqAtOneBalanced4F3);

static void BM_Gauss2F1(benchmark::State& state) {
  const Gauss2F1 f(1, 0.65, 1.35);
  const double z = static_cast<double>(state.range(0)) / 100.0;
  for (auto _ : state) benchmark::DoNotOptimize(f(z));
}
BENCHMARK(BM_Gauss2F1)->Arg(-80)->Arg(30)->Arg(90)->Arg(99);

static void BM_F1Series(benchmark::State& state) {
  const AppellParams p{0.7, 0.2, 0.9, 1.9, 0.9, 0.3};
  for (auto _ : state) benchmark::DoNotOptimize(f1_series(p));
}
BENCHMARK(BM_F1Series);

static void BM_RhsMain(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(rhs_main(0.65));
}
BENCHMARK(BM_RhsMain)->Unit(benchmark::kMicrosecond);

static void BM_LhsMain(benchmark::State& state) {
  const double d = static_cast<double>(state.range(0)) / 100.0;
  for (auto _ : state) benchmark::DoNotOptimize(lhs_main(d));
}
BENCHMARK(BM_LhsMain)->Arg(30)->Arg(65)->Arg(90)->Unit(benchmark::kMillisecond);

static void BM_MonteCarlo4D(benchmark::State& state) {
  MCSpec m = default_check_config().mc;
  m.samples = static_cast<std::uint64_t>(state.range(0));
  const IntegrandND f = integrands::quad4d(0.65);
  for (auto _ : state) benchmark::DoNotOptimize(mc_integrate(f, m));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MonteCarlo4D)->Arg(100'000)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
