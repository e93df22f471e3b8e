#include <benchmark/benchmark.h>

#include "shapecone/decompose.hpp"
#include "shapecone/matrices.hpp"
#include "shapecone/oracle.hpp"

using namespace shapecone;

static void BM_InvertM(benchmark::State& state) {
  const RMatrix m = matrix_M(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(invert(m));
}
BENCHMARK(BM_InvertM)->RangeMultiplier(2)->Range(4, 64);

static void BM_ClosedFormMInverse(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(matrix_M_inverse(n));
}
BENCHMARK(BM_ClosedFormMInverse)->RangeMultiplier(2)->Range(4, 64);

static void BM_ConcaveGreedy(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const ShapeVector c = sample_in_cone(ConeKind::positive_concave, n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(decompose_concave_greedy(c));
}
BENCHMARK(BM_ConcaveGreedy)->RangeMultiplier(2)->Range(4, 64);

static void BM_DecomposeViaMatrix(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const ShapeVector c = sample_in_cone(ConeKind::positive_concave, n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(decompose_via_matrix(c, ConeKind::positive_concave));
}
BENCHMARK(BM_DecomposeViaMatrix)->RangeMultiplier(2)->Range(4, 64);

static void BM_ConvexCanonical(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const ShapeVector c = sample_in_cone(ConeKind::positive_convex, n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(decompose_convex_canonical(c));
}
BENCHMARK(BM_ConvexCanonical)->RangeMultiplier(2)->Range(4, 64);

static void BM_ConicFeasibility(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const GeneratorSet g = generators(ConeKind::positive_convex, n);
  const ShapeVector v = sample_in_cone(ConeKind::positive_convex, n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(conic_feasibility(v, g));
}
BENCHMARK(BM_ConicFeasibility)->RangeMultiplier(2)->Range(4, 32);

BENCHMARK_MAIN();
