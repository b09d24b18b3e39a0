#include <benchmark/benchmark.h>

#include "fusion_forge/group_catalog.hpp"
#include "fusion_forge/projective_rep.hpp"
#include "fusion_forge/twisted_double.hpp"

using namespace fusion_forge;

namespace {

void BM_TwistedIrreducibles(benchmark::State& state) {
  auto g = catalog::symmetric(static_cast<int>(state.range(0)));
  const auto alpha = Cocycle2::trivial(Subgroup::whole(g));
  for (auto _ : state) benchmark::DoNotOptimize(twisted_irreducibles(alpha));
}
BENCHMARK(BM_TwistedIrreducibles)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_BuildDouble(benchmark::State& state) {
  auto g = catalog::symmetric(static_cast<int>(state.range(0)));
  const auto w = Cocycle3::trivial(g);
  for (auto _ : state) benchmark::DoNotOptimize(build_double(w));
}
BENCHMARK(BM_BuildDouble)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_FusionTableDouble(benchmark::State& state) {
  auto g = catalog::symmetric(static_cast<int>(state.range(0)));
  const auto cat = build_double(Cocycle3::trivial(g));
  const auto threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(fusion_table(cat, threads));
}
BENCHMARK(BM_FusionTableDouble)->Args({3, 1})->Args({4, 1})->Args({4, 4})->Unit(benchmark::kMillisecond);

void BM_FusionTableTwistedCyclic(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto cat = build_double(cyclic_3cocycle(n, 1));
  for (auto _ : state) benchmark::DoNotOptimize(fusion_table(cat));
}
BENCHMARK(BM_FusionTableTwistedCyclic)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_Verify(benchmark::State& state) {
  const auto ring = fusion_table(build_double(Cocycle3::trivial(catalog::symmetric(4))));
  VerifyOptions options;
  options.commutativity = true;
  for (auto _ : state) benchmark::DoNotOptimize(verify(ring, options));
}
BENCHMARK(BM_Verify)->Unit(benchmark::kMillisecond);

void BM_BasedRingIsomorphism(benchmark::State& state) {
  const auto ring = fusion_table(build_double(Cocycle3::trivial(catalog::symmetric(4))));
  std::vector<int> order(ring.rank());
  for (int i = 0; i < ring.rank(); ++i) order[i] = i == 0 ? 0 : ring.rank() - i;
  const auto shuffled = permuted(ring, order);
  for (auto _ : state) benchmark::DoNotOptimize(isomorphic_as_based_rings(ring, shuffled));
}
BENCHMARK(BM_BasedRingIsomorphism)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
