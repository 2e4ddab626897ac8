#include <benchmark/benchmark.h>

#include <random>

#include "multireg/experiment.hpp"
#include "multireg/formulas.hpp"

using namespace multireg;

namespace {

PointScheme fixed_support(const SpaceShape& shape, int s, std::uint64_t seed) {
  PrimeField F(32003);
  std::mt19937_64 rng(seed);
  return random_points(shape, F, s, rng, 20, seed);
}

void BM_FatIdealGroebner(benchmark::State& state) {
  SpaceShape shape({1, 1});
  PrimeField F(32003);
  PointScheme support = fixed_support(shape, 2, 11);
  PointScheme Z(shape, F, support.points(), {2, 2});
  PolyRing R(shape, F);
  for (auto _ : state) {
    Ideal I = fat_point_ideal(R, Z);
    benchmark::DoNotOptimize(I.reduced_gb().size());
  }
}
BENCHMARK(BM_FatIdealGroebner);

void BM_ReducedPointsGroebner(benchmark::State& state) {
  SpaceShape shape({1, 1, 1});
  PrimeField F(32003);
  int s = static_cast<int>(state.range(0));
  PointScheme X = fixed_support(shape, s, 23);
  PolyRing R(shape, F);
  for (auto _ : state) {
    Ideal I = fat_point_ideal(R, X);
    benchmark::DoNotOptimize(I.reduced_gb().size());
  }
}
BENCHMARK(BM_ReducedPointsGroebner)->Arg(3)->Arg(6);

void BM_GradedHilbert(benchmark::State& state) {
  SpaceShape shape({1, 1, 1});
  PrimeField F(32003);
  PointScheme X = fixed_support(shape, 6, 23);
  PolyRing R(shape, F);
  Ideal I = fat_point_ideal(R, X);
  I.reduced_gb();
  int horizon = verification_horizon(shape, X.mults());
  for (auto _ : state) {
    std::uint64_t acc = 0;
    for (int t = 0; t <= horizon; ++t) acc += graded_hilbert(I, t);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_GradedHilbert);

void BM_RegularityCriterion(benchmark::State& state) {
  SpaceShape shape({2, 1});
  PrimeField F(32003);
  PointScheme X = fixed_support(shape, 5, 31);
  PolyRing R(shape, F);
  Ideal I = fat_point_ideal(R, X);
  I.reduced_gb();
  for (auto _ : state) {
    std::mt19937_64 rng(7);
    benchmark::DoNotOptimize(is_m_regular(I, 5, rng, 1));
  }
}
BENCHMARK(BM_RegularityCriterion);

void BM_GinOracle(benchmark::State& state) {
  SpaceShape shape({2, 1});
  PrimeField F(32003);
  PointScheme X = fixed_support(shape, 5, 31);
  PolyRing R(shape, F);
  Ideal I = fat_point_ideal(R, X);
  I.reduced_gb();
  for (auto _ : state) {
    std::mt19937_64 rng(13);
    benchmark::DoNotOptimize(regularity_via_gin(I, rng));
  }
}
BENCHMARK(BM_GinOracle);

void BM_EvaluationRank(benchmark::State& state) {
  SpaceShape shape({2, 1});
  PrimeField F(32003);
  PointScheme X = fixed_support(shape, 5, 37);
  MultiDegree t({2, 2});
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        evaluation_hilbert(shape, F, X.points(), t));
  }
}
BENCHMARK(BM_EvaluationRank);

}  // namespace

BENCHMARK_MAIN();
