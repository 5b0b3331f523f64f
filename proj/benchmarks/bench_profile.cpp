#include <benchmark/benchmark.h>

#include "isoperim/phase_plane.hpp"
#include "isoperim/profile.hpp"

using namespace isoperim;

static void BM_SchwarzschildProfileBuild(benchmark::State& state) {
  const int samples = static_cast<int>(state.range(0));
  auto g = schwarzschild_metric::with_mass(1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(schwarzschild_profile(g, 50.0, samples));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SchwarzschildProfileBuild)->RangeMultiplier(2)->Range(128, 2048)->Complexity();

static void BM_HawkingMassEval(benchmark::State& state) {
  auto p = schwarzschild_profile(schwarzschild_metric::with_mass(1.0), 50.0, 600);
  const double v = 0.5 * (p.v_min() + p.v_max());
  for (auto _ : state) {
    benchmark::DoNotOptimize(hawking_mass(p, v));
  }
}
BENCHMARK(BM_HawkingMassEval);

static void BM_MassSeries(benchmark::State& state) {
  auto p = schwarzschild_profile(schwarzschild_metric::with_mass(1.0), 50.0, 600);
  auto cfg = comparison_config::defaults(1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(compute_mass_series(p, cfg));
  }
}
BENCHMARK(BM_MassSeries);

static void BM_ImcfEvolve(benchmark::State& state) {
  auto p = schwarzschild_profile(schwarzschild_metric::with_mass(1.0), 400.0, 900);
  for (auto _ : state) {
    benchmark::DoNotOptimize(imcf_evolve(p, 2.0, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_ImcfEvolve)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

static void BM_FootballProfile(benchmark::State& state) {
  auto cfg = comparison_config::defaults(0.1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(football_profile(cfg).half_volume);
  }
}
BENCHMARK(BM_FootballProfile)->Unit(benchmark::kMillisecond);

static void BM_CounterexampleProfile(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(counterexample_profile(160.0 * 3.14159265358979));
  }
}
BENCHMARK(BM_CounterexampleProfile)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
