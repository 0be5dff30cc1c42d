#include <benchmark/benchmark.h>

#include "unitsq/forms.hpp"
#include "unitsq/qint.hpp"
#include "unitsq/symbols.hpp"
#include "unitsq/verifier.hpp"

namespace {

void BM_FundamentalUnit(benchmark::State& state) {
  const auto d = static_cast<std::int64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(unitsq::fundamental_unit(d));
}
BENCHMARK(BM_FundamentalUnit)->Arg(130)->Arg(991)->Arg(2 * 197 * 1013)->Arg(1000003);

void BM_EnumerateReduced(benchmark::State& state) {
  const auto disc = -static_cast<std::int64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(unitsq::enumerate_reduced(disc));
}
BENCHMARK(BM_EnumerateReduced)->Arg(260)->Arg(4 * 5 * 9973)->Arg(4 * 397 * 509);

void BM_TwoSylow(benchmark::State& state) {
  const auto group = unitsq::enumerate_reduced(-static_cast<std::int64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(unitsq::two_sylow(group));
}
BENCHMARK(BM_TwoSylow)->Arg(260)->Arg(4 * 5 * 9973)->Arg(4 * 397 * 509);

void BM_SymbolProduct(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(unitsq::theorem_condition_2(5, 9973));
}
BENCHMARK(BM_SymbolProduct);

void BM_EvaluatePair(benchmark::State& state) {
  const auto p2 = static_cast<std::int64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(unitsq::evaluate_pair(5, p2));
}
BENCHMARK(BM_EvaluatePair)->Arg(13)->Arg(9973)->Unit(benchmark::kMicrosecond);

void BM_Scan(benchmark::State& state) {
  unitsq::ScanConfig config;
  config.limit = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(unitsq::scan(config));
}
BENCHMARK(BM_Scan)->Arg(20000)->UseRealTime()->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
