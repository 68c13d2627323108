#include <benchmark/benchmark.h>

#include "bax/baxterizer.hpp"
#include "bax/catalog.hpp"
#include "bax/verifier.hpp"

using namespace bax;

static void BM_BuildSu2(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_su2k(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BuildSu2)->Arg(4)->Arg(8)->Arg(12);

static void BM_Pentagon(benchmark::State& state) {
  auto cat = build_su2k(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_f_identities(cat));
}
BENCHMARK(BM_Pentagon)->Arg(4)->Arg(8);

static void BM_SolveCentral(benchmark::State& state) {
  auto cat = build_tambara_yamagami(static_cast<int>(state.range(0)));
  Label X = cat.label("X");
  for (auto _ : state) benchmark::DoNotOptimize(solve_central(cat, X, 1));
}
BENCHMARK(BM_SolveCentral)->Arg(4)->Arg(8)->Arg(16);

static void BM_Ybe(benchmark::State& state) {
  auto cat = build_su2k(4);
  auto sol = solve_central(cat, 1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(verify_ybe(cat, 1, sol, static_cast<int>(state.range(0)), {5, 1, 1e-8}));
}
BENCHMARK(BM_Ybe)->Arg(3)->Arg(5);

static void BM_Transfer(benchmark::State& state) {
  auto cat = build_su2k(3);
  auto sol = solve_central(cat, 1, 2);
  auto basis = enumerate_trees(cat, 1, static_cast<int>(state.range(0)), BoundarySpec::periodic());
  for (auto _ : state) benchmark::DoNotOptimize(transfer_matrix(cat, sol, cplx(0.7, 0.3), basis));
}
BENCHMARK(BM_Transfer)->Arg(4)->Arg(6)->Arg(8);

static void BM_LoopTorus(benchmark::State& state) {
  auto w = loop_weights(std::polar(1.0, 0.4), cplx(1.3, 0.2));
  int L = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(loop_partition_transfer(w, L, L));
}
BENCHMARK(BM_LoopTorus)->Arg(2)->Arg(4);
BENCHMARK_MAIN();
