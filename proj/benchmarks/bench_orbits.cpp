#include <benchmark/benchmark.h>

#include <shadowaudit/analysis.hpp>
#include <shadowaudit/highprec.hpp>
#include <shadowaudit/logistic.hpp>
#include <shadowaudit/report.hpp>

namespace {

using namespace shadowaudit;

void BM_StepG(benchmark::State& state) {
  double x = 0.4;
  for (auto _ : state) {
    x = step(EvaluationForm::G, x, 3.8);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_StepG);

void BM_StepH(benchmark::State& state) {
  double x = 0.4;
  for (auto _ : state) {
    x = step(EvaluationForm::H, x, 3.8);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_StepH);

void BM_IterateFixed(benchmark::State& state) {
  const MapParameters params("3.8", "0.4", static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(iterate_fixed(EvaluationForm::G, params));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_IterateFixed)->Arg(100)->Arg(10000);

void BM_IterateReference(benchmark::State& state) {
  const MapParameters params("3.8", "0.4", 100);
  const int digits = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(iterate_reference(params, digits));
}
BENCHMARK(BM_IterateReference)->Arg(100)->Arg(1000)->Arg(2000)->Unit(benchmark::kMicrosecond);

void BM_DeviationSeries(benchmark::State& state) {
  const auto params = paper_parameters();
  const auto g = iterate_fixed(EvaluationForm::G, params);
  const auto ref = iterate_reference(params);
  for (auto _ : state) benchmark::DoNotOptimize(deviation_series(g, ref));
}
BENCHMARK(BM_DeviationSeries)->Unit(benchmark::kMicrosecond);

void BM_FullAudit(benchmark::State& state) {
  const auto params = paper_parameters();
  for (auto _ : state) benchmark::DoNotOptimize(build_audit_report(params));
}
BENCHMARK(BM_FullAudit)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
