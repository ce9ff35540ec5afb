#include <benchmark/benchmark.h>

#include "dlx/queens.hpp"
#include "dlx/report.hpp"
#include "dlx/search.hpp"

namespace {

dlx::CoverProblem queens(int n) {
  dlx::QueensSpec spec;
  spec.n = n;
  return dlx::queens_problem(spec);
}

void BM_BuildMatrix(benchmark::State& state) {
  auto p = queens(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    dlx::LinkedMatrix m(p);
    benchmark::DoNotOptimize(m.cell_count());
  }
}
BENCHMARK(BM_BuildMatrix)->Arg(8)->Arg(12);

void BM_CoverUncover(benchmark::State& state) {
  auto p = queens(12);
  dlx::LinkedMatrix m(p);
  auto c = m.column_handle(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(m.cover(c));
    benchmark::DoNotOptimize(m.uncover(c));
  }
}
BENCHMARK(BM_CoverUncover);

void BM_QueensSearch(benchmark::State& state) {
  auto p = queens(static_cast<int>(state.range(0)));
  uint64_t updates = 0;
  for (auto _ : state) {
    dlx::LinkedMatrix m(p);
    auto stats = dlx::search(m, {});
    updates += stats.total_updates;
    benchmark::DoNotOptimize(stats.total_solutions);
  }
  state.counters["updates/s"] =
      benchmark::Counter(static_cast<double>(updates), benchmark::Counter::kIsRate);
}
BENCHMARK(BM_QueensSearch)->Arg(8)->Arg(10);

void BM_Estimate(benchmark::State& state) {
  auto p = queens(10);
  dlx::LinkedMatrix m(p);
  for (auto _ : state) {
    auto r = dlx::estimate(m, {}, 100);
    benchmark::DoNotOptimize(r.nodes_mean);
  }
}
BENCHMARK(BM_Estimate);

}  // namespace

BENCHMARK_MAIN();
