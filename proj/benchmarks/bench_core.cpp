#include <benchmark/benchmark.h>

#include <vector>

#include "disclab/boxes.hpp"
#include "disclab/circle.hpp"
#include "disclab/constructions.hpp"
#include "disclab/maximal.hpp"
#include "disclab/means.hpp"
#include "disclab/measure.hpp"
#include "disclab/volterra.hpp"

using namespace disclab;

static void BM_EvaluateOnCircle(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const PowerSeries f = random_polynomial(n, 1);
  const std::size_t m = alias_free_samples(n);
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_on_circle(f, 0.99, m));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EvaluateOnCircle)->RangeMultiplier(8)->Range(64, 1 << 16)->Complexity();

static void BM_CauchyProduct(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const PowerSeries f = random_polynomial(n, 2), g = random_polynomial(n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(cauchy_product(f, g));
}
BENCHMARK(BM_CauchyProduct)->RangeMultiplier(8)->Range(64, 1 << 14);

static void BM_DirichletNormQuadrature(benchmark::State& state) {
  const PowerSeries f = random_polynomial(static_cast<std::size_t>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(dirichlet_norm(f, 4.0, 3.0));
}
BENCHMARK(BM_DirichletNormQuadrature)->Arg(32)->Arg(256);

static void BM_BmoaBoxNorm(benchmark::State& state) {
  const PowerSeries g = log_series(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bmoa_box_norm(g));
}
BENCHMARK(BM_BmoaBoxNorm)->Arg(256)->Arg(4096);

static void BM_BoxMassSharp(benchmark::State& state) {
  const MeasureSpec mu = MeasureSpec::sharp(PhiSpec::iterated_log(2, 1.0), 4.0);
  for (auto _ : state) benchmark::DoNotOptimize(box_mass(mu, {static_cast<int>(state.range(0)), 0}));
}
BENCHMARK(BM_BoxMassSharp)->Arg(4)->Arg(24);

static void BM_MaximalFunction(benchmark::State& state) {
  std::vector<double> phi(static_cast<std::size_t>(state.range(0)));
  for (std::size_t j = 0; j < phi.size(); ++j) phi[j] = static_cast<double>(j % 7);
  const MaximalFunction mf(phi);
  for (auto _ : state) benchmark::DoNotOptimize(mf(cplx(0.999, 0.01)));
}
BENCHMARK(BM_MaximalFunction)->Arg(1024)->Arg(1 << 14);

static void BM_TgApply(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const PowerSeries f = random_polynomial(n, 5), g = random_polynomial(n, 6);
  for (auto _ : state) benchmark::DoNotOptimize(tg_apply(f, g));
}
BENCHMARK(BM_TgApply)->Arg(64)->Arg(4096);

BENCHMARK_MAIN();
