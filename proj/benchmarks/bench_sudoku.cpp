#include <benchmark/benchmark.h>

#include "sudoku/sudoku.hpp"
#include "sudoku/tools/sweep.hpp"

namespace {

using namespace sudoku;

Graph family(std::string_view spec) { return generate(parse_family_spec(spec)); }

void BM_ChromaticNumber(benchmark::State& state, const char* spec) {
  const Graph g = family(spec);
  for (auto _ : state) benchmark::DoNotOptimize(chromatic_number(g));
}
BENCHMARK_CAPTURE(BM_ChromaticNumber, cycle_51, "cycle:51");
BENCHMARK_CAPTURE(BM_ChromaticNumber, sudoku_2, "sudoku:2");
BENCHMARK_CAPTURE(BM_ChromaticNumber, sudoku_3, "sudoku:3");

void BM_SudokuNumber(benchmark::State& state, const char* spec) {
  const Graph g = family(spec);
  for (auto _ : state) benchmark::DoNotOptimize(sudoku_number(g));
}
BENCHMARK_CAPTURE(BM_SudokuNumber, complete_6, "complete:6");
BENCHMARK_CAPTURE(BM_SudokuNumber, cycle_7, "cycle:7");
BENCHMARK_CAPTURE(BM_SudokuNumber, k_3_4, "complete_bipartite:3:4");
BENCHMARK_CAPTURE(BM_SudokuNumber, sudoku_2, "sudoku:2");

// Uniqueness check of an empty 9x9 grid: the solver must find two completions.
void BM_CountExtensionsEmptySudoku(benchmark::State& state) {
  const Graph g = family("sudoku:3");
  const auto empty = PartialColoring::empty(g.order(), 9);
  for (auto _ : state) benchmark::DoNotOptimize(count_extensions(g, empty, 9));
}
BENCHMARK(BM_CountExtensionsEmptySudoku);

void BM_Witness(benchmark::State& state) {
  const Graph g = family("path:12");
  for (auto _ : state) benchmark::DoNotOptimize(build_witness(g));
}
BENCHMARK(BM_Witness);

void BM_Sweep(benchmark::State& state) {
  sweep::SweepOptions opts;
  opts.n_max = static_cast<std::size_t>(state.range(0));
  opts.claims = {sweep::Claim::theorem1, sweep::Claim::witness};
  for (auto _ : state) benchmark::DoNotOptimize(sweep::sweep_internal(opts));
}
BENCHMARK(BM_Sweep)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
