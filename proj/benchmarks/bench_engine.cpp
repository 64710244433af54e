#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "grasscalc/grassmann.hpp"
#include "grasscalc/oracle.hpp"
#include "grasscalc/schubert.hpp"

using namespace grasscalc;

namespace {

AlgebraElement random_element(std::mt19937_64& rng, std::uint64_t top,
                              int nterms) {
  std::uniform_int_distribution<std::uint64_t> mask_dist(0, top);
  std::uniform_int_distribution<int> coeff_dist(1, 9);
  AlgebraElement x;
  for (int t = 0; t < nterms; ++t)
    x += AlgebraElement::monomial(Monomial::from_mask(mask_dist(rng)),
                                  coeff_dist(rng));
  return x;
}

void BM_ElemMul(benchmark::State& state) {
  const GrassmannContext ctx(3, 7);
  std::mt19937_64 rng(99);
  const int nterms = static_cast<int>(state.range(0));
  const AlgebraElement x = random_element(rng, ctx.top_mask().mask(), nterms);
  const AlgebraElement y = random_element(rng, ctx.top_mask().mask(), nterms);
  for (auto _ : state) benchmark::DoNotOptimize(x * y);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ElemMul)->Arg(16)->Arg(64)->Arg(256);

void BM_TauBasis(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const int N = static_cast<int>(state.range(1));
  const GrassmannContext ctx(k, N);
  for (auto _ : state) {
    const OmegaTable omegas(ctx);
    benchmark::DoNotOptimize(TauBasis(ctx, omegas));
  }
}
BENCHMARK(BM_TauBasis)->Args({2, 6})->Args({3, 7})->Args({4, 8});

void BM_Sigma1PowerIntegral(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const int N = static_cast<int>(state.range(1));
  const SchubertEngine se{GrassmannContext(k, N)};
  const std::vector<Partition> classes(
      static_cast<std::size_t>(k * (N - k)), Partition{1});
  for (auto _ : state)
    benchmark::DoNotOptimize(se.integrate_product(classes));
}
BENCHMARK(BM_Sigma1PowerIntegral)->Args({2, 6})->Args({3, 6})->Args({3, 7});

void BM_NormalizationIntegral(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const int N = static_cast<int>(state.range(1));
  const GrassmannContext ctx(k, N);
  const OmegaTable omegas(ctx);
  const AlgebraElement det_phi = build_tau(ctx, omegas, k);
  for (auto _ : state)
    benchmark::DoNotOptimize(berezin_integral(ctx, pow(det_phi, N - k)));
}
BENCHMARK(BM_NormalizationIntegral)->Args({2, 6})->Args({3, 6})->Args({3, 7});

void BM_OracleSigma1Power(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const int N = static_cast<int>(state.range(1));
  const std::vector<Partition> classes(
      static_cast<std::size_t>(k * (N - k)), Partition{1});
  for (auto _ : state)
    benchmark::DoNotOptimize(oracle::intersection(k, N, classes));
}
BENCHMARK(BM_OracleSigma1Power)->Args({3, 7})->Args({4, 8});

void BM_SchubertClass(benchmark::State& state) {
  const SchubertEngine se{GrassmannContext(3, 6)};
  const Partition staircase{3, 2, 1};
  for (auto _ : state) benchmark::DoNotOptimize(se.schubert_class(staircase));
}
BENCHMARK(BM_SchubertClass);

}  // namespace

BENCHMARK_MAIN();
