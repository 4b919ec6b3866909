#include <benchmark/benchmark.h>

#include "walkerpc/analyze.hpp"
#include "walkerpc/corpus.hpp"

namespace {

void BM_RunExample(benchmark::State& state) {
  const auto& fixture = walkerpc::corpus().at(static_cast<std::size_t>(state.range(0)));
  state.SetLabel(fixture.name);
  for (auto _ : state) benchmark::DoNotOptimize(walkerpc::run_example(fixture.name));
}
BENCHMARK(BM_RunExample)->DenseRange(0, 7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
