#include <benchmark/benchmark.h>

#include "qhom/catalog.hpp"
#include "qhom/homology.hpp"
#include "qhom/verify.hpp"

using namespace qhom;

namespace {

void BM_ResolveTopSimple(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = make_example_algebra(n);
  const auto s = standard_module(a, StandardKind::simple, n - 1);
  const auto cap = default_cap(*a);
  for (auto _ : state) benchmark::DoNotOptimize(minimal_resolution(s, ResolutionKind::projective, cap));
}
BENCHMARK(BM_ResolveTopSimple)->DenseRange(4, 12, 4);

void BM_HomTable(benchmark::State& state) {
  const auto a = make_example_algebra(static_cast<std::size_t>(state.range(0)));
  const auto u = enumerate_indecomposables(a);
  for (auto _ : state) benchmark::DoNotOptimize(hom_table(u));
  state.counters["objects"] = static_cast<double>(u.size());
}
BENCHMARK(BM_HomTable)->DenseRange(4, 12, 4);

void BM_ExtBothRoutes(benchmark::State& state) {
  const auto a = make_example_algebra(static_cast<std::size_t>(state.range(0)));
  const auto u = enumerate_indecomposables(a);
  const auto cap = default_cap(*a);
  for (auto _ : state) {
    std::size_t total = 0;
    for (const auto& x : u.objects)
      for (const auto& y : u.objects)
        total += ext_dim(x.module, y.module, 1, cap) + ext_dim_via_injective(x.module, y.module, 1, cap);
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_ExtBothRoutes)->Arg(4)->Arg(6);

void BM_VerifyAll(benchmark::State& state) {
  const auto a = make_example_algebra(static_cast<std::size_t>(state.range(0)));
  const auto cap = default_cap(*a);
  for (auto _ : state) benchmark::DoNotOptimize(verify_all(a, cap));
}
BENCHMARK(BM_VerifyAll)->DenseRange(4, 12, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
