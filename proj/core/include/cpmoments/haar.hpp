#pragma once

#include <atomic>
#include <cstdint>
#include <vector>

#include "cpmoments/coefficients.hpp"
#include "cpmoments/philox.hpp"

namespace cpmom {

// Eigenvalue data of one sampled matrix: one angle in [0, pi] per
// conjugate pair e^{+-i theta}, plus the fixed real eigenvalues (empty
// for Sp and SO, {+1, -1} for OMinus). 2 * angles + fixed = 2N.
struct HaarSample {
  std::vector<double> angles;
  std::vector<int> fixed_eigs;
};

struct SamplerCounters {
  std::atomic<std::uint64_t> attempts{0};
  std::atomic<std::uint64_t> discarded{0};
};

// Haar draw for matrix size 2N. The draw is a pure function of
// (ensemble, N, seed, index). Returns false when the eigensolver fails
// or the multiplicity-two pairing is inconsistent beyond 1e-8; such
// samples are counted and the caller skips the index.
bool try_sample_haar(Ensemble ensemble, unsigned N, std::uint64_t seed, std::uint64_t index,
                     HaarSample& out, SamplerCounters* counters = nullptr);

// Cross-check sampler: Metropolis random walk on the eigenangle density
// itself. Not used by the estimators; exposed for validation runs.
class WeylMetropolisSampler {
 public:
  WeylMetropolisSampler(Ensemble ensemble, unsigned N, std::uint64_t seed);

  // One sweep of single-angle reflected proposals.
  void sweep();
  const HaarSample& current() const { return sample_; }
  double acceptance_rate() const;

 private:
  double log_density(const std::vector<double>& angles) const;
  Ensemble ensemble_;
  HaarSample sample_;
  std::uint64_t accepted_ = 0, proposed_ = 0;
  Philox4x32 rng_;
  double step_ = 0.5;
};

}  // namespace cpmom
