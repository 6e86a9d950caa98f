#include "cpmoments/haar.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

namespace cpmom {

namespace {

constexpr double kPairTol = 1e-8;

double clamp_cos(double x) { return std::min(1.0, std::max(-1.0, x)); }

bool pair_up(std::vector<double>& eigs, std::vector<double>& angles) {
  // Ascending eigenvalues carry each cos(theta) twice; adjacent values
  // beyond the tolerance mean the solve went wrong.
  angles.clear();
  for (std::size_t t = 0; t + 1 < eigs.size(); t += 2) {
    if (std::abs(eigs[t] - eigs[t + 1]) > kPairTol) return false;
    angles.push_back(std::acos(clamp_cos(0.5 * (eigs[t] + eigs[t + 1]))));
  }
  return true;
}

// Haar O(2N) conditioned on the requested determinant sign, by QR of a
// Gaussian matrix with the R-diagonal sign correction; the other
// component is rejected and redrawn.
bool orthogonal_sample(bool det_plus, unsigned N, Philox4x32& rng, HaarSample& out,
                       SamplerCounters* counters) {
  const int dim = static_cast<int>(2 * N);
  std::vector<double> a(static_cast<std::size_t>(dim) * dim), tau(dim), w(dim);
  std::vector<double> diag_sign(dim);

  while (true) {
    if (counters) counters->attempts.fetch_add(1, std::memory_order_relaxed);
    for (auto& x : a) x = rng.next_normal();
    if (LAPACKE_dgeqrf(LAPACK_COL_MAJOR, dim, dim, a.data(), dim, tau.data()) != 0)
      return false;

    int sign = 1;
    for (int i = 0; i < dim; ++i) {
      if (tau[i] != 0.0) sign = -sign;
      diag_sign[i] = a[i + i * static_cast<std::size_t>(dim)] < 0.0 ? -1.0 : 1.0;
      if (diag_sign[i] < 0.0) sign = -sign;
    }
    if ((sign > 0) != det_plus) continue;  // resample the whole matrix

    if (LAPACKE_dorgqr(LAPACK_COL_MAJOR, dim, dim, dim, a.data(), dim, tau.data()) != 0)
      return false;
    for (int j = 0; j < dim; ++j)
      for (int i = 0; i < dim; ++i) a[i + j * static_cast<std::size_t>(dim)] *= diag_sign[j];

    // Symmetric part carries cos(theta) twice per pair and the fixed
    // eigenvalues once each.
    std::vector<double> sym(static_cast<std::size_t>(dim) * dim);
    for (int j = 0; j < dim; ++j)
      for (int i = 0; i < dim; ++i)
        sym[i + j * static_cast<std::size_t>(dim)] =
            0.5 * (a[i + j * static_cast<std::size_t>(dim)] +
                   a[j + i * static_cast<std::size_t>(dim)]);
    if (LAPACKE_dsyev(LAPACK_COL_MAJOR, 'N', 'U', dim, sym.data(), dim, w.data()) != 0)
      return false;

    out.fixed_eigs.clear();
    std::vector<double> eigs(w.begin(), w.end());
    if (!det_plus) {
      // Deflate the fixed -1 and +1 eigenvalues of the matrix itself.
      if (std::abs(eigs.front() + 1.0) > kPairTol || std::abs(eigs.back() - 1.0) > kPairTol)
        return false;
      eigs.erase(eigs.begin());
      eigs.pop_back();
      out.fixed_eigs = {1, -1};
    }
    return pair_up(eigs, out.angles);
  }
}

struct Quat {
  std::complex<double> a, b;  // a + b j

  Quat operator+(const Quat& o) const { return {a + o.a, b + o.b}; }
  Quat operator-(const Quat& o) const { return {a - o.a, b - o.b}; }
  Quat operator*(const Quat& o) const {
    return {a * o.a - b * std::conj(o.b), a * o.b + b * std::conj(o.a)};
  }
  Quat conj() const { return {std::conj(a), -b}; }
  double norm2() const { return std::norm(a) + std::norm(b); }
  Quat scaled(double s) const { return {a * s, b * s}; }
};

// Householder QR over the quaternions with the diagonal phase pushed
// into Q, realized as a 2N x 2N complex matrix. Standard compact-group
// recipe; Q is Haar on the unitary symplectic group.
void symplectic_matrix(unsigned N, Philox4x32& rng, std::vector<std::complex<double>>& embed) {
  const std::size_t n = N;
  std::vector<Quat> m(n * n), q(n * n);
  for (auto& x : m) {
    x.a = {rng.next_normal(), rng.next_normal()};
    x.b = {rng.next_normal(), rng.next_normal()};
  }

  std::vector<std::vector<Quat>> reflectors;
  std::vector<Quat> diag_phase(n);
  for (std::size_t c = 0; c < n; ++c) {
    double sigma2 = 0;
    for (std::size_t i = c; i < n; ++i) sigma2 += m[i + c * n].norm2();
    const double sigma = std::sqrt(sigma2);

    const Quat x1 = m[c + c * n];
    const double nx1 = std::sqrt(x1.norm2());
    const Quat phase = nx1 > 0 ? x1.scaled(1.0 / nx1) : Quat{{1, 0}, {0, 0}};

    std::vector<Quat> v(n - c);
    for (std::size_t i = c; i < n; ++i) v[i - c] = m[i + c * n];
    v[0] = v[0] + phase.scaled(sigma);
    double vnorm2 = 0;
    for (const auto& vi : v) vnorm2 += vi.norm2();

    if (vnorm2 > 0) {
      const double beta = 2.0 / vnorm2;
      for (std::size_t j = c; j < n; ++j) {
        Quat s{{0, 0}, {0, 0}};
        for (std::size_t i = c; i < n; ++i) s = s + v[i - c].conj() * m[i + j * n];
        s = s.scaled(beta);
        for (std::size_t i = c; i < n; ++i) m[i + j * n] = m[i + j * n] - v[i - c] * s;
      }
    }
    reflectors.push_back(std::move(v));
    // R_cc = -phase * sigma; scaling column c of Q by -phase makes the
    // R diagonal real positive.
    diag_phase[c] = Quat{{-1, 0}, {0, 0}} * phase;
  }

  for (std::size_t i = 0; i < n * n; ++i) q[i] = Quat{{0, 0}, {0, 0}};
  for (std::size_t i = 0; i < n; ++i) q[i + i * n].a = 1.0;
  for (std::size_t c = n; c-- > 0;) {
    const auto& v = reflectors[c];
    double vnorm2 = 0;
    for (const auto& vi : v) vnorm2 += vi.norm2();
    if (vnorm2 == 0) continue;
    const double beta = 2.0 / vnorm2;
    for (std::size_t j = 0; j < n; ++j) {
      Quat s{{0, 0}, {0, 0}};
      for (std::size_t i = c; i < n; ++i) s = s + v[i - c].conj() * q[i + j * n];
      s = s.scaled(beta);
      for (std::size_t i = c; i < n; ++i) q[i + j * n] = q[i + j * n] - v[i - c] * s;
    }
  }
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t i = 0; i < n; ++i) q[i + c * n] = q[i + c * n] * diag_phase[c];

  // q = a + b j maps to the 2x2 complex block [[a, b], [-conj b, conj a]].
  const std::size_t dim = 2 * n;
  embed.assign(dim * dim, {0, 0});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Quat& x = q[i + j * n];
      embed[2 * i + (2 * j) * dim] = x.a;
      embed[2 * i + (2 * j + 1) * dim] = x.b;
      embed[2 * i + 1 + (2 * j) * dim] = -std::conj(x.b);
      embed[2 * i + 1 + (2 * j + 1) * dim] = std::conj(x.a);
    }
  }
}

bool symplectic_sample(unsigned N, Philox4x32& rng, HaarSample& out,
                       SamplerCounters* counters) {
  if (counters) counters->attempts.fetch_add(1, std::memory_order_relaxed);
  const int dim = static_cast<int>(2 * N);
  std::vector<std::complex<double>> e;
  symplectic_matrix(N, rng, e);

  for (int j = 0; j < dim; ++j) {
    for (int i = 0; i <= j; ++i) {
      const auto h = 0.5 * (e[i + j * static_cast<std::size_t>(dim)] +
                            std::conj(e[j + i * static_cast<std::size_t>(dim)]));
      e[i + j * static_cast<std::size_t>(dim)] = h;
      e[j + i * static_cast<std::size_t>(dim)] = std::conj(h);
    }
  }
  std::vector<double> w(dim);
  if (LAPACKE_zheev(LAPACK_COL_MAJOR, 'N', 'U', dim,
                    reinterpret_cast<lapack_complex_double*>(e.data()), dim,
                    w.data()) != 0)
    return false;

  out.fixed_eigs.clear();
  return pair_up(w, out.angles);
}

}  // namespace

bool try_sample_haar(Ensemble ensemble, unsigned N, std::uint64_t seed, std::uint64_t index,
                     HaarSample& out, SamplerCounters* counters) {
  if (N < 1) throw std::invalid_argument("try_sample_haar: N must be >= 1");
  Philox4x32 rng(seed, index);
  bool ok = false;
  switch (ensemble) {
    case Ensemble::Sp:
      ok = symplectic_sample(N, rng, out, counters);
      break;
    case Ensemble::SO:
      ok = orthogonal_sample(true, N, rng, out, counters);
      break;
    case Ensemble::OMinus:
      ok = orthogonal_sample(false, N, rng, out, counters);
      break;
  }
  if (!ok && counters) counters->discarded.fetch_add(1, std::memory_order_relaxed);
  return ok;
}

WeylMetropolisSampler::WeylMetropolisSampler(Ensemble ensemble, unsigned N, std::uint64_t seed)
    : ensemble_(ensemble), rng_(seed, 0xae5f00d1u) {
  const unsigned pairs = ensemble == Ensemble::OMinus ? N - 1 : N;
  sample_.angles.assign(pairs, 0.0);
  for (unsigned i = 0; i < pairs; ++i)
    sample_.angles[i] = M_PI * (i + 1.0) / (pairs + 1.0);
  if (ensemble == Ensemble::OMinus) sample_.fixed_eigs = {1, -1};
}

double WeylMetropolisSampler::log_density(const std::vector<double>& angles) const {
  double lp = 0;
  for (std::size_t i = 0; i < angles.size(); ++i) {
    for (std::size_t j = i + 1; j < angles.size(); ++j) {
      const double d = std::cos(angles[i]) - std::cos(angles[j]);
      if (d == 0) return -std::numeric_limits<double>::infinity();
      lp += 2.0 * std::log(std::abs(d));
    }
  }
  if (ensemble_ != Ensemble::SO)
    for (double t : angles) {
      const double s = std::sin(t);
      if (s <= 0) return -std::numeric_limits<double>::infinity();
      lp += 2.0 * std::log(s);
    }
  return lp;
}

void WeylMetropolisSampler::sweep() {
  for (std::size_t i = 0; i < sample_.angles.size(); ++i) {
    std::vector<double> prop = sample_.angles;
    double t = prop[i] + step_ * (2.0 * rng_.next_unit() - 1.0);
    // reflect into [0, pi]
    while (t < 0 || t > M_PI) t = t < 0 ? -t : 2 * M_PI - t;
    prop[i] = t;
    ++proposed_;
    const double delta = log_density(prop) - log_density(sample_.angles);
    if (delta >= 0 || std::log(rng_.next_unit()) < delta) {
      sample_.angles = std::move(prop);
      ++accepted_;
    }
  }
}

double WeylMetropolisSampler::acceptance_rate() const {
  return proposed_ == 0 ? 0.0 : static_cast<double>(accepted_) / proposed_;
}

}  // namespace cpmom
