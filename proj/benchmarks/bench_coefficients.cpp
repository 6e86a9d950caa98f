#include <benchmark/benchmark.h>

#include "cpmoments/coefficients.hpp"

using namespace cpmom;

static void BM_CoeffComb(benchmark::State& state) {
  const CoeffQuery q{Ensemble::Sp, static_cast<unsigned>(state.range(0)),
                     static_cast<unsigned>(state.range(1)), 0,
                     static_cast<unsigned>(state.range(2))};
  for (auto _ : state) {
    auto r = leading_coeff_comb(q);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_CoeffComb)->Args({0, 1, 4})->Args({1, 1, 3})->Args({2, 2, 4})->Args({0, 4, 4});

static void BM_CoeffDet(benchmark::State& state) {
  const CoeffQuery q{Ensemble::Sp, static_cast<unsigned>(state.range(0)),
                     static_cast<unsigned>(state.range(1)), 0,
                     static_cast<unsigned>(state.range(2))};
  for (auto _ : state) {
    auto r = leading_coeff_det(q);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_CoeffDet)->Args({0, 1, 4})->Args({1, 1, 3})->Args({2, 2, 4});
