#include <benchmark/benchmark.h>

#include <string>

#include "liecubic/full_dynamics.hpp"
#include "liecubic/invariants.hpp"
#include "liecubic/reduction.hpp"
#include "liecubic/sampling.hpp"

namespace {

using namespace liecubic;

const char* const kIds[] = {"so3", "su2", "so4", "so5", "abelian3"};

// One unit of simulated time at h = 1e-3 (1000 steps).
void BM_IntegrateFull(benchmark::State& state) {
  const Algebra alg = catalog(kIds[state.range(0)]);
  Rng rng(1);
  const FullState s0 = random_full_state(alg, rng);
  for (auto _ : state) {
    FullState last = s0;
    integrate_full(alg, s0, 1.0, 1e-3, [&](std::size_t, double, const FullState& s) { last = s; });
    benchmark::DoNotOptimize(last.y);
  }
  state.SetLabel(alg.id());
  state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_IntegrateFull)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_IntegrateReduced(benchmark::State& state) {
  const Algebra alg = catalog(kIds[state.range(0)]);
  Rng rng(2);
  const ReducedState r0 = random_reduced_state(alg, rng);
  for (auto _ : state) {
    ReducedState last = r0;
    integrate_reduced(alg, r0, 1.0, 1e-3, [&](std::size_t, double, const ReducedState& r) { last = r; });
    benchmark::DoNotOptimize(last.y);
  }
  state.SetLabel(alg.id());
  state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_IntegrateReduced)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_RankRg(benchmark::State& state) {
  const Algebra alg = catalog(kIds[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(rank_rg(alg.structure()).r_g);
  state.SetLabel(alg.id());
}
BENCHMARK(BM_RankRg)->DenseRange(0, 4)->Unit(benchmark::kMicrosecond);

void BM_LieCartanReport(benchmark::State& state) {
  const Algebra alg = catalog(kIds[state.range(0)]);
  Rng rng(3);
  const ReducedState r = random_reduced_state(alg, rng);
  for (auto _ : state) benchmark::DoNotOptimize(lie_cartan_report(alg, r, r.theta).lie_cartan_count);
  state.SetLabel(alg.id());
}
BENCHMARK(BM_LieCartanReport)->DenseRange(0, 4)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
