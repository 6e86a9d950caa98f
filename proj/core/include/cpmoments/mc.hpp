#pragma once

#include <cstdint>

#include "cpmoments/coefficients.hpp"
#include "cpmoments/haar.hpp"

namespace cpmom {

struct MomentEstimate {
  double mean = 0.0;
  double std_error = 0.0;  // sample standard deviation / sqrt(sample_count)
  std::uint64_t sample_count = 0;
  std::uint64_t discarded = 0;
  CoeffQuery query;
  unsigned N = 0;
};

struct McOptions {
  unsigned threads = 1;
  std::uint64_t block_size = 4096;
};

// Monte Carlo mean of (Lambda^{(n1)}(1))^{k1} (Lambda^{(n2)}(1))^{k2} over
// `count` Haar draws. Samples are normalized by (2N)^exponent before
// accumulation and the blockwise reduction has a fixed shape, so the
// result is a pure function of (query, N, count, seed, block_size)
// regardless of the worker count. Accumulation runs in extended
// precision; a non-finite accumulator is reported as a runtime error.
//
// Accepts any query with n1 <= n2 and k1, k2 not both zero; the OMinus
// coefficient constraint n1 >= 1 is not needed to measure a moment.
MomentEstimate estimate_moment(const CoeffQuery& q, unsigned N, std::uint64_t count,
                               std::uint64_t seed, const McOptions& options = {});

struct AsymptoticReport {
  MomentEstimate estimate;
  Rational coeff;          // leading coefficient, comb backend
  unsigned exponent = 0;   // power of 2N
  int sign = 1;            // moment_sign(query)
  double predicted = 0.0;  // sign * coeff * (2N)^exponent
  double ratio = 0.0;      // mean / predicted
  double ratio_std_error = 0.0;
  double z = 0.0;          // (ratio - 1) / ratio_std_error
};

// Runs the estimator and compares against the predicted leading term.
// Requires a fully valid coefficient query.
AsymptoticReport asymptotic_report(const CoeffQuery& q, unsigned N, std::uint64_t count,
                                   std::uint64_t seed, const McOptions& options = {});

}  // namespace cpmom
