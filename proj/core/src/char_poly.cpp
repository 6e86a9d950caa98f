#include "cpmoments/char_poly.hpp"

#include <algorithm>
#include <cmath>

namespace cpmom {

std::vector<double> char_poly_jet(const std::vector<double>& angles,
                                  const std::vector<int>& fixed_eigs, unsigned order) {
  std::vector<double> jet(order + 1, 0.0), next(order + 1, 0.0);
  jet[0] = 1.0;
  auto convolve = [&](const double* f, unsigned deg) {
    std::fill(next.begin(), next.end(), 0.0);
    for (unsigned i = 0; i <= order; ++i) {
      if (jet[i] == 0.0) continue;
      for (unsigned j = 0; j <= deg && i + j <= order; ++j) next[i + j] += jet[i] * f[j];
    }
    jet.swap(next);
  };
  for (double t : angles) {
    const double c = 2.0 - 2.0 * std::cos(t);
    const double f[3] = {c, c, 1.0};  // (1 - 2cos t * s + s^2) at s = 1 + x
    convolve(f, 2);
  }
  for (int e : fixed_eigs) {
    // (1 - e s) at s = 1 + x
    const double f[2] = {1.0 - e, static_cast<double>(-e)};
    convolve(f, 1);
  }
  return jet;
}

std::vector<double> char_derivs_at_one(const HaarSample& sample,
                                       const std::vector<unsigned>& orders) {
  const unsigned degree =
      2 * static_cast<unsigned>(sample.angles.size()) +
      static_cast<unsigned>(sample.fixed_eigs.size());
  unsigned max_order = 0;
  for (unsigned n : orders) max_order = std::max(max_order, std::min(n, degree));
  const auto jet = char_poly_jet(sample.angles, sample.fixed_eigs, max_order);

  std::vector<double> out;
  out.reserve(orders.size());
  for (unsigned n : orders) {
    if (n > degree) {
      out.push_back(0.0);
      continue;
    }
    double fac = 1.0;
    for (unsigned t = 2; t <= n; ++t) fac *= t;
    out.push_back(jet[n] * fac);
  }
  return out;
}

}  // namespace cpmom
