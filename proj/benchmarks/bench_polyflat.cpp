#include <benchmark/benchmark.h>

#include "polyflat/cyclotomic.hpp"
#include "polyflat/flatness.hpp"
#include "polyflat/geometry.hpp"
#include "polyflat/sqrt_sums.hpp"

using namespace polyflat;

static void BM_Stabilizer(benchmark::State& state) {
  const CycloElt u = cot_pi_over(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(stabilizer(u));
}
BENCHMARK(BM_Stabilizer)->Arg(15)->Arg(60)->Arg(199);

static void BM_MinPoly(benchmark::State& state) {
  const CycloElt u = cot_pi_over(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(min_poly(u));
}
BENCHMARK(BM_MinPoly)->Arg(5)->Arg(15)->Arg(30);

static void BM_ClassifyRange(benchmark::State& state) {
  const auto hi = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(classify_range(3, hi, 1));
}
BENCHMARK(BM_ClassifyRange)->Arg(60)->Arg(120)->Unit(benchmark::kMillisecond);

static void BM_RefutePentagon(benchmark::State& state) {
  const Poly target = min_poly(cot_pi_over(5) * Rational(5, 4));
  const auto k = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(refute_or_find_sum(target, k, 6, 1));
}
BENCHMARK(BM_RefutePentagon)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_AreaFormula(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(polygon_area_formula_check(n));
}
BENCHMARK(BM_AreaFormula)->Arg(12)->Arg(50)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
