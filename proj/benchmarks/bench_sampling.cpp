#include <benchmark/benchmark.h>

#include "cpmoments/char_poly.hpp"
#include "cpmoments/haar.hpp"

using namespace cpmom;

static void BM_HaarSample(benchmark::State& state, Ensemble e) {
  const unsigned N = static_cast<unsigned>(state.range(0));
  HaarSample s;
  std::uint64_t idx = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(try_sample_haar(e, N, 7, idx++, s));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()));
}
BENCHMARK_CAPTURE(BM_HaarSample, sp, Ensemble::Sp)->Arg(5)->Arg(30);
BENCHMARK_CAPTURE(BM_HaarSample, so, Ensemble::SO)->Arg(5)->Arg(30);
BENCHMARK_CAPTURE(BM_HaarSample, ominus, Ensemble::OMinus)->Arg(5)->Arg(30);

static void BM_CharDerivs(benchmark::State& state) {
  const unsigned N = static_cast<unsigned>(state.range(0));
  HaarSample s;
  try_sample_haar(Ensemble::Sp, N, 7, 0, s);
  for (auto _ : state) {
    auto d = char_derivs_at_one(s, {0, 1, 2, 3});
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_CharDerivs)->Arg(5)->Arg(30);
