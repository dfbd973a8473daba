#include <benchmark/benchmark.h>

#include <random>

#include "coverbound/assemble.hpp"
#include "coverbound/dualize.hpp"
#include "coverbound/eigen_sym.hpp"
#include "coverbound/generators.hpp"
#include "coverbound/solver.hpp"

namespace cb = coverbound;

static void BM_family_independent(benchmark::State& state) {
  cb::Graph g = cb::random_graph(static_cast<int>(state.range(0)), 0.3, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cb::SetFamily::independent_sets(g, 4));
  }
}
BENCHMARK(BM_family_independent)->Arg(12)->Arg(18)->Arg(24);

static void BM_assemble_cover(benchmark::State& state) {
  cb::Graph g = cb::petersen_graph();
  int t = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cb::assemble_cover(g, t));
  }
}
BENCHMARK(BM_assemble_cover)->Arg(1)->Arg(2);

static void BM_eigen_sym(benchmark::State& state) {
  int dim = static_cast<int>(state.range(0));
  cb::SymMatrix m(dim);
  std::mt19937_64 rng(11);
  for (int i = 0; i < dim; ++i) {
    for (int j = i; j < dim; ++j) {
      m.set(i, j, (rng() >> 11) * 0x1.0p-53 - 0.5);
    }
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(cb::sym_eigen(m));
  }
}
BENCHMARK(BM_eigen_sym)->Arg(16)->Arg(64)->Arg(128);

static void BM_solve_cover(benchmark::State& state) {
  cb::Graph g = cb::cycle_graph(static_cast<int>(state.range(0)));
  cb::AssembledSdp asdp = cb::assemble_cover(g, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cb::solve(asdp.problem));
  }
}
BENCHMARK(BM_solve_cover)->Arg(5)->Arg(9);

static void BM_dualize_cover(benchmark::State& state) {
  cb::Graph g = cb::petersen_graph();
  cb::AssembledSdp asdp = cb::assemble_cover(g, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cb::dualize(asdp.problem));
  }
}
BENCHMARK(BM_dualize_cover);

BENCHMARK_MAIN();
