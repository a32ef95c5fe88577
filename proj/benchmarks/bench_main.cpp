#include <benchmark/benchmark.h>

#include "compalg/clifford.hpp"
#include "compalg/crank.hpp"
#include "compalg/int_matrix.hpp"
#include "compalg/poincare.hpp"
#include "compalg/random.hpp"

using namespace compalg;

static void BM_CRank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Algebra alg = QuatAlgebra::make(FieldSpec::rationals(), -1, -1);
  SplitMix64 rng(1);
  CompMatrix z = random_comp_matrix(alg, n, n, rng, 3);
  for (auto _ : state) benchmark::DoNotOptimize(c_rank(z));
}
BENCHMARK(BM_CRank)->DenseRange(1, 4);

static void BM_StudyDet(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Algebra alg = QuatAlgebra::make(FieldSpec::rationals(), 2, 5);
  SplitMix64 rng(2);
  CompMatrix z = random_comp_matrix(alg, n, n, rng, 3);
  for (auto _ : state) benchmark::DoNotOptimize(study_det(z));
}
BENCHMARK(BM_StudyDet)->DenseRange(1, 6);

static void BM_Smith(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  SplitMix64 rng(3);
  IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = rng.between(-20, 20);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(a));
}
BENCHMARK(BM_Smith)->RangeMultiplier(2)->Range(2, 16);

static void BM_GeometricProduct(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Clifford alg = CliffordAlgebra::make(n / 2, n - n / 2);
  SplitMix64 rng(4);
  Multivector x(alg), y(alg);
  for (std::uint32_t m = 0; m < alg->dim(); ++m) {
    x[m] = rng.between(-3, 3);
    y[m] = rng.between(-3, 3);
  }
  for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_GeometricProduct)->DenseRange(2, 6, 2);

static void BM_Hirsch(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto g = WeylDegrees::single(WeylType::BC, n);
  auto u = WeylDegrees::single(WeylType::U1SU, n);
  for (auto _ : state) benchmark::DoNotOptimize(hirsch(g, u));
}
BENCHMARK(BM_Hirsch)->DenseRange(2, 8, 3);

static void BM_VerifyBound(benchmark::State& state) {
  BoundParams p;
  p.algebra = QuatAlgebra::make(FieldSpec::rationals(), -1, -1);
  p.m = p.n = p.d = 2;
  p.trials = 10;
  for (auto _ : state) benchmark::DoNotOptimize(verify_bound(p));
}
BENCHMARK(BM_VerifyBound)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
