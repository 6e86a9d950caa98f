#include <benchmark/benchmark.h>

#include "cpmoments/series.hpp"

using namespace cpmom;

static void BM_HypergeometricSeries(benchmark::State& state) {
  const unsigned m = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    auto s = hypergeometric_series(3, m);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_HypergeometricSeries)->Arg(4)->Arg(8)->Arg(16);

static void BM_SeriesDet(benchmark::State& state) {
  const unsigned k = static_cast<unsigned>(state.range(0));
  const unsigned m = static_cast<unsigned>(state.range(1));
  std::vector<std::vector<TruncatedSeries>> mat;
  for (unsigned i = 1; i <= k; ++i) {
    std::vector<TruncatedSeries> row;
    for (unsigned j = 1; j <= k; ++j)
      row.push_back(hypergeometric_series(2L * i - j, m));
    mat.push_back(row);
  }
  for (auto _ : state) {
    auto d = series_det(mat);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_SeriesDet)->Args({2, 4})->Args({4, 8})->Args({6, 8});
