#include <benchmark/benchmark.h>

#include <vector>

#include "haga/figure.hpp"
#include "haga/oracle.hpp"
#include "haga/verifier.hpp"

namespace {

using haga::Rat;

void BM_Build(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(haga::build(7, Rat(22, 13)));
}
BENCHMARK(BM_Build);

void BM_CircleSet(benchmark::State& state) {
  const haga::HagaConfig cfg = haga::build(7, Rat(22, 13));
  for (auto _ : state) benchmark::DoNotOptimize(haga::circle_set(cfg));
}
BENCHMARK(BM_CircleSet);

void BM_Verify(benchmark::State& state) {
  const haga::HagaConfig cfg = haga::build(7, Rat(22, 13));
  for (auto _ : state) benchmark::DoNotOptimize(haga::verify(cfg));
}
BENCHMARK(BM_Verify);

void BM_Sweep(benchmark::State& state) {
  std::vector<Rat> es;
  for (long k = -84; k <= 112; ++k) es.emplace_back(k, 28);
  es.resize(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(haga::sweep(1, es));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Sweep)->Arg(16)->Arg(197)->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_Oracle(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(haga::oracle::approx_build(7.0, 22.0 / 13.0));
}
BENCHMARK(BM_Oracle);

void BM_RenderFigure(benchmark::State& state) {
  const haga::FigureSpec spec = haga::find_preset("eps-h5").spec;
  for (auto _ : state) benchmark::DoNotOptimize(haga::render_figure(spec));
}
BENCHMARK(BM_RenderFigure);

}  // namespace

BENCHMARK_MAIN();
