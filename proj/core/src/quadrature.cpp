#include "cpmoments/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <functional>
#include <stdexcept>

#include "cpmoments/char_poly.hpp"

namespace cpmom {

namespace {

using GK = boost::math::quadrature::gauss_kronrod<double, 61>;

double integrate_1d(const std::function<double(double)>& f) {
  return GK::integrate(f, 0.0, M_PI, 12, 1e-13);
}

double unnorm_density(Ensemble e, const std::vector<double>& angles) {
  double d = 1.0;
  for (std::size_t i = 0; i < angles.size(); ++i)
    for (std::size_t j = i + 1; j < angles.size(); ++j) {
      const double diff = std::cos(angles[i]) - std::cos(angles[j]);
      d *= diff * diff;
    }
  if (e != Ensemble::SO)
    for (double t : angles) {
      const double s = std::sin(t);
      d *= s * s;
    }
  return d;
}

double observable(const std::vector<double>& angles, const std::vector<int>& fixed,
                  unsigned k1, unsigned k2, unsigned n1, unsigned n2) {
  HaarSample s{angles, fixed};
  const auto d = char_derivs_at_one(s, {n1, n2});
  double v = 1.0;
  for (unsigned c = 0; c < k1; ++c) v *= d[0];
  for (unsigned c = 0; c < k2; ++c) v *= d[1];
  return v;
}

}  // namespace

double weyl_quadrature_moment(Ensemble ensemble, unsigned N, unsigned k1, unsigned k2,
                              unsigned n1, unsigned n2) {
  if (N < 1 || N > 2)
    throw std::invalid_argument("weyl_quadrature_moment: only N in {1, 2} is supported");
  if (k1 == 0 && k2 == 0)
    throw std::invalid_argument("weyl_quadrature_moment: k1 and k2 must not both be zero");
  if (n1 > n2)
    throw std::invalid_argument("weyl_quadrature_moment: requires n1 <= n2");

  std::vector<int> fixed;
  unsigned pairs = N;
  if (ensemble == Ensemble::OMinus) {
    fixed = {1, -1};
    pairs = N - 1;
  }

  if (pairs == 0)  // O^-(2): both eigenvalues are pinned, no integral
    return observable({}, fixed, k1, k2, n1, n2);

  if (pairs == 1) {
    const double z = integrate_1d([&](double t) { return unnorm_density(ensemble, {t}); });
    const double m = integrate_1d([&](double t) {
      return observable({t}, fixed, k1, k2, n1, n2) * unnorm_density(ensemble, {t});
    });
    return m / z;
  }

  auto double_integral = [&](const std::function<double(double, double)>& f) {
    return integrate_1d([&](double t1) {
      return integrate_1d([&](double t2) { return f(t1, t2); });
    });
  };
  const double z = double_integral(
      [&](double t1, double t2) { return unnorm_density(ensemble, {t1, t2}); });
  const double m = double_integral([&](double t1, double t2) {
    return observable({t1, t2}, fixed, k1, k2, n1, n2) * unnorm_density(ensemble, {t1, t2});
  });
  return m / z;
}

}  // namespace cpmom
