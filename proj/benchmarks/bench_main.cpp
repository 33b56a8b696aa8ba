#include <benchmark/benchmark.h>

#include "mla/catalog.hpp"
#include "support.hpp"

using namespace mla;

static void BM_Rref(benchmark::State& st) {
  fixtures::Gen g(1);
  const auto n = static_cast<std::size_t>(st.range(0));
  Matrix m = g.mat(n, n + 2, 9);
  for (auto _ : st) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_Rref)->Arg(8)->Arg(16)->Arg(32);

static void BM_Cohomology(benchmark::State& st) {
  Pair pr = fixtures::plus_pair(BaseName::n2, {1, 2}, static_cast<std::size_t>(st.range(0)));
  for (auto _ : st)
    for (std::size_t p = 0; p <= 3; ++p) benchmark::DoNotOptimize(CohomologySpace(pr.coeff(), p).dim());
}
BENCHMARK(BM_Cohomology)->Arg(0)->Arg(2);

static void BM_Admissibility(benchmark::State& st) {
  CatalogRow row = catalog_row(RowKey{BaseName::n2, "Ia", {}});
  for (auto _ : st) benchmark::DoNotOptimize(admissibility(row.pair, row.cocycle).admissible);
}
BENCHMARK(BM_Admissibility);

static void BM_Equivalence(benchmark::State& st) {
  fixtures::Gen g(2);
  Pair pr = fixtures::plus_pair(BaseName::h1, {1}, 1);
  QuadraticCocycle z = fixtures::random_cocycle(g, pr);
  QuadraticCocycle w = q_action(pr, z, g.qcochain(pr));
  for (auto _ : st) benchmark::DoNotOptimize(equivalent_cocycles(pr, w, z).has_value());
}
BENCHMARK(BM_Equivalence);

static void BM_Sweep(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(sweep({static_cast<std::size_t>(st.range(0)), 1}).ok());
}
BENCHMARK(BM_Sweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->Iterations(1);
BENCHMARK_MAIN();
