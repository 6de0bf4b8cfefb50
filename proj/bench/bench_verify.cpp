// Serial against OpenMP-parallel execution of the randomized suites.
#include <benchmark/benchmark.h>

#include "gcalc/verify.hpp"

namespace {

void run(benchmark::State& state, const char* suite, gcalc::Execution mode) {
  const size_t cases = static_cast<size_t>(state.range(0));
  for (auto _ : state) {
    gcalc::SuiteReport r = gcalc::run_suite(suite, 1, cases, mode);
    benchmark::DoNotOptimize(r.cases.data());
    if (!r.all_passed()) state.SkipWithError("suite failed");
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(cases));
}

void BM_R3Serial(benchmark::State& s) { run(s, "r3", gcalc::Execution::Serial); }
void BM_R3Parallel(benchmark::State& s) { run(s, "r3", gcalc::Execution::Parallel); }
void BM_StitchOrderSerial(benchmark::State& s) { run(s, "stitch-order", gcalc::Execution::Serial); }
void BM_StitchOrderParallel(benchmark::State& s) { run(s, "stitch-order", gcalc::Execution::Parallel); }
void BM_FoxMilnorSerial(benchmark::State& s) { run(s, "fox-milnor", gcalc::Execution::Serial); }
void BM_FoxMilnorParallel(benchmark::State& s) { run(s, "fox-milnor", gcalc::Execution::Parallel); }

}  // namespace

BENCHMARK(BM_R3Serial)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_R3Parallel)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StitchOrderSerial)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StitchOrderParallel)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FoxMilnorSerial)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FoxMilnorParallel)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
