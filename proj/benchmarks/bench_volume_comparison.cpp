#include <benchmark/benchmark.h>

#include <numbers>

#include "isoperim/phase_plane.hpp"
#include "isoperim/volume_comparison.hpp"

using namespace isoperim;

static void BM_WepsLinearBranch(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(w_eps(0.2, 3.0));
  }
}
BENCHMARK(BM_WepsLinearBranch);

static void BM_WepsIntegralBranch(benchmark::State& state) {
  const int panels = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(w_eps(0.2, 9.0, panels));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_WepsIntegralBranch)->RangeMultiplier(2)->Range(500, 8000)->Complexity();

static void BM_Alpha(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(alpha(0.134727, 512, static_cast<int>(state.range(0))).alpha);
  }
}
BENCHMARK(BM_Alpha)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);

static void BM_PathVolumeCaseTwo(benchmark::State& state) {
  auto cfg = comparison_config::defaults(0.15);
  auto sp = special_points(cfg);
  auto path = gamma(0.5 * (sp.x_fb + sp.x_s), cfg);
  for (auto _ : state) {
    benchmark::DoNotOptimize(path_volume(path));
  }
}
BENCHMARK(BM_PathVolumeCaseTwo);

static void BM_Bishop(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(bishop_halfvolume(dim, 2.0));
  }
}
BENCHMARK(BM_Bishop)->Arg(2)->Arg(3)->Arg(5);

BENCHMARK_MAIN();
