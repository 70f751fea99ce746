#include <benchmark/benchmark.h>

#include "hyperlag/blowup.hpp"
#include "hyperlag/certificate.hpp"
#include "hyperlag/closed_form.hpp"
#include "hyperlag/optimizer.hpp"
#include "hyperlag/tower.hpp"

using namespace hyperlag;

static void BM_EvaluateGradient(benchmark::State& state) {
  const LagrangePolynomial poly(build_pk(static_cast<int>(state.range(0))));
  const auto x = SimplexVector::uniform(poly.m());
  std::vector<double> g(x.size());
  for (auto _ : state) benchmark::DoNotOptimize(poly.value_and_gradient(x.coords(), g));
}
BENCHMARK(BM_EvaluateGradient)->DenseRange(1, 6);

static void BM_MaximizePk(benchmark::State& state) {
  const LagrangePolynomial poly(build_pk(static_cast<int>(state.range(0))));
  const OptimizerConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(maximize(poly, cfg).value);
}
BENCHMARK(BM_MaximizePk)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);

static void BM_TowerPolynomial(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tower_polynomial(k).degree());
}
BENCHMARK(BM_TowerPolynomial)->DenseRange(4, 12, 2)->Unit(benchmark::kMillisecond);

static void BM_DegreeCertificate(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const auto pk = tower_polynomial(k);
  const long prec = default_precision_bits(k);
  for (auto _ : state) benchmark::DoNotOptimize(degree_certificate(k, pk, prec).valid);
}
BENCHMARK(BM_DegreeCertificate)->DenseRange(2, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_Blowup(benchmark::State& state) {
  const Pattern p = build_pk(1);
  const auto parts = round_part_sizes(pk_optimal_vector(1), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(blowup(p, parts).edge_count());
}
BENCHMARK(BM_Blowup)->Arg(90)->Arg(180)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
