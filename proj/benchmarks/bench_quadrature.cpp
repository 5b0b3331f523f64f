#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "isoperim/quadrature.hpp"

using namespace isoperim;
namespace {
constexpr double pi = std::numbers::pi;
}

static void BM_SimpsonSmooth(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto f = [](double x) { return std::sin(x) * std::exp(-0.3 * x); };
  for (auto _ : state) {
    benchmark::DoNotOptimize(integrate_smooth(f, 0.0, pi, n));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SimpsonSmooth)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

static void BM_SingularSphereIntegrand(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  singular_integrand si;
  si.f = [](double z) {
    const double g = 1.0 - std::cbrt(z * z);
    return g <= 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / std::sqrt(g);
  };
  si.subtraction_coefficient = std::sqrt(1.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(integrate_right_singular(si, 0.0, 1.0, n));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SingularSphereIntegrand)->RangeMultiplier(4)->Range(256, 16384)->Complexity();

static void BM_SingularCoefficient(benchmark::State& state) {
  auto g = [](double z) { return 1.0 - std::cbrt(z * z); };
  for (auto _ : state) {
    benchmark::DoNotOptimize(singular_coefficient(g, 0.0, 1.0));
  }
}
BENCHMARK(BM_SingularCoefficient);

BENCHMARK_MAIN();
