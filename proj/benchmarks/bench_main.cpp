#include <benchmark/benchmark.h>

#include "hilbsmooth/bunch.hpp"
#include "hilbsmooth/classify.hpp"
#include "hilbsmooth/cotangent.hpp"
#include "hilbsmooth/oracle.hpp"
#include "hilbsmooth/staircase.hpp"

using namespace hilbsmooth;

namespace {

// A box with one added slab, grown with the argument.
Staircase sample(std::int64_t k) {
  const auto w = static_cast<Exponent>(k);
  return add_box(box(BoxSpec({w, w, 2})), 2, 1, {w + 1, w + 1, 1});
}

void BM_Enumerate3(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_staircases(3, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_Enumerate3)->DenseRange(4, 9);

void BM_CotangentDimension(benchmark::State& state) {
  const auto beta = sample(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cotangent_dimension(beta));
  state.counters["n"] = static_cast<double>(beta.size());
}
BENCHMARK(BM_CotangentDimension)->DenseRange(2, 6);

void BM_TangentDimension(benchmark::State& state) {
  const auto beta = sample(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tangent_dimension(beta));
  state.counters["n"] = static_cast<double>(beta.size());
}
BENCHMARK(BM_TangentDimension)->DenseRange(2, 5);

void BM_BuildBunch(benchmark::State& state) {
  const auto beta = sample(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_bunch(beta));
  state.counters["n"] = static_cast<double>(beta.size());
}
BENCHMARK(BM_BuildBunch)->DenseRange(2, 6);

void BM_CompoundBox(benchmark::State& state) {
  const auto beta = sample(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(is_compound_box(beta));
}
BENCHMARK(BM_CompoundBox)->DenseRange(2, 6);

} // namespace

BENCHMARK_MAIN();
