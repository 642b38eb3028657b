#include <benchmark/benchmark.h>

#include <losemilat/losemilat.hpp>

using namespace losemilat;

namespace {

void BM_Solutions(benchmark::State& state) {
  const Context ctx(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  const auto eq = parse_constraint("x1x2 = x1x3");
  for (auto _ : state) benchmark::DoNotOptimize(solutions(eq, ctx).size());
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(ctx.cube_size()));
}
BENCHMARK(BM_Solutions)->Args({3, 3})->Args({5, 5})->Args({8, 6});

void BM_Closure(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Context ctx(n, n);
  PointSet z(ctx);
  std::vector<int> diag(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) diag[static_cast<std::size_t>(i)] = i + 1;
  z.insert(Point(diag));
  for (auto _ : state) benchmark::DoNotOptimize(closure(z).size());
}
BENCHMARK(BM_Closure)->DenseRange(2, 5);

void BM_EnumerateClosedSets(benchmark::State& state) {
  const Context ctx(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_closed_sets(ctx).size());
}
BENCHMARK(BM_EnumerateClosedSets)->Args({2, 2})->Args({3, 3})->Unit(benchmark::kMillisecond);

void BM_DecomposeAll(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Context ctx(n, n);
  const auto eqs = enumerate_eq(n);
  for (auto _ : state) {
    std::size_t total = 0;
    for (const auto& eq : eqs) total += decompose(eq, ctx).size();
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_DecomposeAll)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_AvgIrr(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(avg_irr_by_sum(n));
}
BENCHMARK(BM_AvgIrr)->Arg(12)->Arg(50)->Arg(200);

}  // namespace
BENCHMARK_MAIN();
