#include "cpmoments/mc.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include "cpmoments/char_poly.hpp"

namespace cpmom {

namespace {

struct BlockStat {
  long double sum = 0.0L;
  long double sum_sq = 0.0L;
  std::uint64_t accepted = 0;
  std::uint64_t discarded = 0;
};

void structural_validate(const CoeffQuery& q) {
  if (q.k1 == 0 && q.k2 == 0)
    throw InvalidQuery("invalid query: k1 and k2 must not both be zero");
  if (q.n1 > q.n2) throw InvalidQuery("invalid query: requires n1 <= n2");
}

bool coefficient_valid(const CoeffQuery& q) {
  try {
    validate(q);
    return true;
  } catch (const InvalidQuery&) {
    return false;
  }
}

}  // namespace

MomentEstimate estimate_moment(const CoeffQuery& q, unsigned N, std::uint64_t count,
                               std::uint64_t seed, const McOptions& options) {
  structural_validate(q);
  if (N < 1) throw InvalidQuery("invalid query: N must be >= 1");
  if (count < 1000) throw InvalidQuery("invalid query: sample count must be >= 1000");

  // Keep per-sample magnitudes O(1): divide by the predicted growth when
  // the query has a defined exponent, else leave raw.
  const double scale =
      coefficient_valid(q) ? std::pow(2.0 * N, static_cast<double>(scaling_exponent(q)))
                           : 1.0;
  const double inv_scale = 1.0 / scale;

  const std::uint64_t block = options.block_size == 0 ? 4096 : options.block_size;
  const std::uint64_t nblocks = (count + block - 1) / block;
  std::vector<BlockStat> stats(nblocks);

  const std::vector<unsigned> orders = {q.n1, q.n2, 0};
  auto run_block = [&](std::uint64_t b) {
    BlockStat st;
    HaarSample sample;
    const std::uint64_t lo = b * block;
    const std::uint64_t hi = std::min(count, lo + block);
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      if (!try_sample_haar(q.ensemble, N, seed, idx, sample)) {
        ++st.discarded;
        continue;
      }
      const auto d = char_derivs_at_one(sample, orders);
      if (q.ensemble == Ensemble::SO && d[2] < 0.0)
        throw std::runtime_error("estimate_moment: negative SO char poly value at s=1");
      double v = inv_scale;
      for (unsigned c = 0; c < q.k1; ++c) v *= d[0];
      for (unsigned c = 0; c < q.k2; ++c) v *= d[1];
      st.sum += v;
      st.sum_sq += static_cast<long double>(v) * v;
      ++st.accepted;
    }
    stats[b] = st;
  };

  if (options.threads <= 1) {
    for (std::uint64_t b = 0; b < nblocks; ++b) run_block(b);
  } else {
    std::atomic<std::uint64_t> next{0};
    auto worker = [&]() {
      while (true) {
        const std::uint64_t b = next.fetch_add(1);
        if (b >= nblocks) return;
        run_block(b);
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < options.threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  // Fixed-shape pairwise tree over block statistics, independent of the
  // number of workers.
  std::vector<BlockStat> level(stats);
  while (level.size() > 1) {
    std::vector<BlockStat> up((level.size() + 1) / 2);
    for (std::size_t i = 0; i < up.size(); ++i) {
      up[i] = level[2 * i];
      if (2 * i + 1 < level.size()) {
        up[i].sum += level[2 * i + 1].sum;
        up[i].sum_sq += level[2 * i + 1].sum_sq;
        up[i].accepted += level[2 * i + 1].accepted;
        up[i].discarded += level[2 * i + 1].discarded;
      }
    }
    level.swap(up);
  }
  const BlockStat total = level.empty() ? BlockStat{} : level[0];

  if (!std::isfinite(static_cast<double>(total.sum)) ||
      !std::isfinite(static_cast<double>(total.sum_sq)))
    throw std::runtime_error("estimate_moment: accumulator is not finite");
  if (total.accepted < 2)
    throw std::runtime_error("estimate_moment: fewer than two accepted samples");

  const long double n = static_cast<long double>(total.accepted);
  const long double mean_norm = total.sum / n;
  long double var_norm = (total.sum_sq - n * mean_norm * mean_norm) / (n - 1);
  if (var_norm < 0) var_norm = 0;  // rounding guard for constant samples

  MomentEstimate est;
  est.mean = static_cast<double>(mean_norm) * scale;
  est.std_error = static_cast<double>(std::sqrt(var_norm / n)) * scale;
  est.sample_count = total.accepted;
  est.discarded = total.discarded;
  est.query = q;
  est.N = N;
  return est;
}

AsymptoticReport asymptotic_report(const CoeffQuery& q, unsigned N, std::uint64_t count,
                                   std::uint64_t seed, const McOptions& options) {
  validate(q);
  AsymptoticReport rep;
  rep.estimate = estimate_moment(q, N, count, seed, options);
  const CoeffResult b = leading_coeff(q, Backend::Comb);
  rep.coeff = b.value;
  rep.exponent = b.exponent;
  rep.sign = moment_sign(q);
  rep.predicted =
      rep.sign * b.value.get_d() * std::pow(2.0 * N, static_cast<double>(b.exponent));
  rep.ratio = rep.estimate.mean / rep.predicted;
  rep.ratio_std_error = rep.estimate.std_error / std::abs(rep.predicted);
  rep.z = (rep.ratio - 1.0) / rep.ratio_std_error;
  return rep;
}

}  // namespace cpmom
