// Serial reference vs OpenMP kernels on the largest table diagrams.

#include <benchmark/benchmark.h>

#include <variant>

#include "almalt/bracket.hpp"
#include "almalt/corpus.hpp"
#include "almalt/realize.hpp"
#include "almalt/verify.hpp"

using namespace almalt;

namespace {

const DtCode& widest_code() {
  static const DtCode code = [] {
    DtCode best;
    for (const auto& r : load_embedded_corpus())
      if (r.dt_rep && r.dt_rep->crossings() > best.crossings()) best = *r.dt_rep;
    return best;
  }();
  return code;
}

void BM_StateHistogram(benchmark::State& state) {
  const auto exec = state.range(0) ? Exec::parallel : Exec::serial;
  const auto pd = std::get<PlanarDiagram>(realize(widest_code()));
  for (auto _ : state) benchmark::DoNotOptimize(state_histogram(pd, exec));
  state.SetLabel(std::to_string(pd.crossing_count()) + " crossings");
}
BENCHMARK(BM_StateHistogram)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

void BM_Realize(benchmark::State& state) {
  const auto exec = state.range(0) ? Exec::parallel : Exec::serial;
  for (auto _ : state) benchmark::DoNotOptimize(realize(widest_code(), exec));
}
BENCHMARK(BM_Realize)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

void BM_VerifyAll(benchmark::State& state) {
  const auto rows = load_embedded_corpus();
  for (auto _ : state) benchmark::DoNotOptimize(verify_all(rows, static_cast<int>(state.range(0)), ""));
}
BENCHMARK(BM_VerifyAll)->Arg(1)->Arg(4)->ArgName("workers")->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
