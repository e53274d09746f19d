#include <benchmark/benchmark.h>

#include "motconf/checks.hpp"
#include "motconf/fforacle.hpp"
#include "motconf/motcalc.hpp"

using namespace motconf;

namespace {

TruncatedSeries<Rational> dense_series(int nvars, long order) {
  SeriesLayout layout(nvars, order);
  TruncatedSeries<Rational> f(layout);
  f.set_coefficient(Monomial::one(), 1);
  int v = 1;
  for (const Monomial& m : enumerate_monomials(layout, order))
    f.set_coefficient(m, Rational((v = v * 31 % 17) - 8));
  return f;
}

void BM_SeriesMul(benchmark::State& state) {
  auto f = dense_series(static_cast<int>(state.range(0)), 8);
  for (auto _ : state) benchmark::DoNotOptimize(f * f);
}
BENCHMARK(BM_SeriesMul)->Arg(1)->Arg(2)->Arg(3);

void BM_NaivePow(benchmark::State& state) {
  auto f = dense_series(2, 8);
  Rational r(3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(naive_pow(f, r));
}
BENCHMARK(BM_NaivePow);

void BM_EulerFactorize(benchmark::State& state) {
  auto f = dense_series(2, 8);
  for (auto _ : state) benchmark::DoNotOptimize(euler_factorize(f));
}
BENCHMARK(BM_EulerFactorize);

void BM_PowStructure(benchmark::State& state) {
  auto f = dense_series(2, 8);
  auto y = VarietyClass<CountMeasure>::from_spec(VarietySpec::affine(1));
  PowMode mode = state.range(0) == 0 ? PowMode::euler_product
                                     : PowMode::lemma_substitution;
  for (auto _ : state) benchmark::DoNotOptimize(pow_structure(f, y.cls, mode));
}
BENCHMARK(BM_PowStructure)->Arg(0)->Arg(1);

void BM_LabeledConfSeries(benchmark::State& state) {
  auto y = VarietyClass<CountMeasure>::from_spec(
      VarietySpec::product_of({VarietySpec::projective(1), VarietySpec::affine(1)}));
  for (auto _ : state)
    benchmark::DoNotOptimize(labeled_conf_series(y, 3, state.range(0)));
}
BENCHMARK(BM_LabeledConfSeries)->Arg(7)->Arg(9);

void BM_ClosedPointCensus(benchmark::State& state) {
  VarietySpec spec = VarietySpec::affine(2);
  for (auto _ : state)
    benchmark::DoNotOptimize(closed_point_census(spec, 3, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ClosedPointCensus)->Arg(4)->Arg(6);

void BM_ConfSymfunc(benchmark::State& state) {
  GeneralizedPartition tau(std::vector<int>{2, 1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(conf_symfunc(tau, 8));
}
BENCHMARK(BM_ConfSymfunc);

void BM_StableExpectation(benchmark::State& state) {
  auto y = VarietyClass<CountMeasure>::from_spec(VarietySpec::affine(1));
  CharPolynomial p =
      charpoly_generator(1) * charpoly_generator(2) + charpoly_generator(1);
  for (auto _ : state) benchmark::DoNotOptimize(stable_expectation(p, y));
}
BENCHMARK(BM_StableExpectation);

}  // namespace

BENCHMARK_MAIN();
