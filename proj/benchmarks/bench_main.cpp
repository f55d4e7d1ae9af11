#include <benchmark/benchmark.h>

#include "wforge/chart.hpp"
#include "wforge/degree5.hpp"
#include "wforge/geometry.hpp"
#include "wforge/mesh.hpp"

using namespace wforge;

static void BM_ExactPipeline(benchmark::State& state) {
  const FamilyDescriptor d = r12(2, 1, -1, 3);
  for (auto _ : state) {
    const FamilyInstance inst = make_family(d);
    const SurfacePolynomial s = real_part_surface(build_curve(*inst.exact));
    benchmark::DoNotOptimize(isothermal_residual(s).is_zero());
  }
}
BENCHMARK(BM_ExactPipeline);

static void BM_Degree5Residuals(benchmark::State& state) {
  const SurfacePolynomial s = real_part_surface(build_curve(*make_family(r12(2, 1, -1, 3)).exact));
  for (auto _ : state) {
    const auto r = system_residual(extract_coeffs(s));
    benchmark::DoNotOptimize(r.data());
  }
}
BENCHMARK(BM_Degree5Residuals);

static void BM_MinimalityScan(benchmark::State& state) {
  const PolySurface s(make_family(r12(1, 0, 1, 1)).surface());
  const int grid = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(minimality_scan(s, Region{}, grid).pass);
  state.SetItemsProcessed(state.iterations() * grid * grid);
}
BENCHMARK(BM_MinimalityScan)->Arg(41)->Arg(101);

static void BM_CanonicalChart(benchmark::State& state) {
  const NumericPair p = make_family(r3(1, 1, 0)).numeric;
  for (auto _ : state) {
    const CanonicalChart c = canonical_chart(p, 1.0);
    benchmark::DoNotOptimize(check_chart(c).pass());
  }
}
BENCHMARK(BM_CanonicalChart)->Unit(benchmark::kMillisecond);

static void BM_MeshSample(benchmark::State& state) {
  const PolySurface s(make_family(enneper()).surface());
  const int res = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sample(s, Region{}, res, res).faces.size());
}
BENCHMARK(BM_MeshSample)->Arg(81)->Arg(257)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
