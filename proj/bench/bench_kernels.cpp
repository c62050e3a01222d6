// Serial (Gosper order) vs OpenMP subset-sum kernels.
#include <benchmark/benchmark.h>

#include "coxchar/kernels.hpp"

using namespace coxchar;

namespace {

void bm_serial(benchmark::State& state, Family family) {
  const auto g = CoxeterGraph::build(family, static_cast<int>(state.range(0)));
  const auto scope = is_affine(family) ? kernels::SubsetScope::proper : kernels::SubsetScope::all;
  for (auto _ : state) benchmark::DoNotOptimize(kernels::subset_sum_serial(g, scope));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << g.node_count()));
}

void bm_parallel(benchmark::State& state, Family family) {
  const auto g = CoxeterGraph::build(family, static_cast<int>(state.range(0)));
  const auto scope = is_affine(family) ? kernels::SubsetScope::proper : kernels::SubsetScope::all;
  for (auto _ : state) benchmark::DoNotOptimize(kernels::subset_sum_parallel(g, scope));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << g.node_count()));
  state.counters["threads"] = kernels::available_threads();
}

} // namespace

BENCHMARK_CAPTURE(bm_serial, A, Family::A)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_parallel, A, Family::A)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_serial, D, Family::D)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_parallel, D, Family::D)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_serial, AffC, Family::AffC)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_parallel, AffC, Family::AffC)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
