#include "doctest.h"

#include <cmath>

#include "cpmoments/quadrature.hpp"

using namespace cpmom;

// Reference values worked out from the N <= 2 eigenangle densities by
// hand (semicircle and arcsine moments).
TEST_CASE("quadrature fixtures") {
  // E over 2x2 symplectic: integral of 2(1-cos t) * (2/pi) sin^2 t = 2
  CHECK(weyl_quadrature_moment(Ensemble::Sp, 1, 0, 1, 0, 0) == doctest::Approx(2.0).epsilon(1e-11));
  // 4x4 symplectic mean of the value at 1 is 3
  CHECK(weyl_quadrature_moment(Ensemble::Sp, 2, 0, 1, 0, 0) == doctest::Approx(3.0).epsilon(1e-11));
  // first derivative over 4x4 symplectic: 6
  CHECK(weyl_quadrature_moment(Ensemble::Sp, 2, 0, 1, 0, 1) == doctest::Approx(6.0).epsilon(1e-11));
  // third derivative over 4x4 symplectic: 24 - 12 E[cos t1 + cos t2] = 24
  CHECK(weyl_quadrature_moment(Ensemble::Sp, 2, 0, 1, 0, 3) == doctest::Approx(24.0).epsilon(1e-11));

  // SO(2): uniform angle; E[2-2cos] = 2, E[(2-2cos)^2] = 6
  CHECK(weyl_quadrature_moment(Ensemble::SO, 1, 0, 1, 0, 0) == doctest::Approx(2.0).epsilon(1e-11));
  CHECK(weyl_quadrature_moment(Ensemble::SO, 1, 1, 1, 0, 1) == doctest::Approx(6.0).epsilon(1e-11));
  // SO(4): E[Lambda'(1)] = 4 exactly
  CHECK(weyl_quadrature_moment(Ensemble::SO, 2, 0, 1, 0, 1) == doctest::Approx(4.0).epsilon(1e-11));

  // O^-(2): everything pinned at the fixed eigenvalues; Lambda'(1) = -2
  CHECK(weyl_quadrature_moment(Ensemble::OMinus, 1, 0, 1, 1, 1) == -2.0);
  CHECK(weyl_quadrature_moment(Ensemble::OMinus, 1, 0, 1, 0, 0) == 0.0);
  // O^-(4): one angle with the sin^2 weight; E[Lambda'] = -2 E[2-2cos] = -4
  CHECK(weyl_quadrature_moment(Ensemble::OMinus, 2, 0, 1, 1, 1) == doctest::Approx(-4.0).epsilon(1e-11));
  // and E[Lambda''] = -6 E[2-2cos] = -12
  CHECK(weyl_quadrature_moment(Ensemble::OMinus, 2, 0, 1, 1, 2) == doctest::Approx(-12.0).epsilon(1e-11));
}

TEST_CASE("quadrature rejects unsupported sizes") {
  CHECK_THROWS_AS(weyl_quadrature_moment(Ensemble::SO, 3, 0, 1, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(weyl_quadrature_moment(Ensemble::SO, 0, 0, 1, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(weyl_quadrature_moment(Ensemble::SO, 1, 0, 0, 0, 0), std::invalid_argument);
}

TEST_CASE("quadrature sign matches the coefficient convention at N = 2") {
  // The sampled moments carry moment_sign(q) relative to the tabulated
  // coefficients; the quadrature already shows it at small N.
  struct Case { Ensemble e; unsigned k1, k2, n1, n2; };
  for (const auto& c : {Case{Ensemble::Sp, 0, 1, 0, 1}, Case{Ensemble::Sp, 0, 1, 0, 3},
                        Case{Ensemble::SO, 0, 1, 0, 1}, Case{Ensemble::OMinus, 0, 1, 1, 1},
                        Case{Ensemble::OMinus, 0, 1, 1, 2}, Case{Ensemble::OMinus, 1, 1, 1, 1}}) {
    CoeffQuery q{c.e, c.k1, c.k2, c.n1, c.n2};
    const double quad = weyl_quadrature_moment(c.e, 2, c.k1, c.k2, c.n1, c.n2);
    const Rational b = leading_coeff(q, Backend::Comb).value;
    INFO(ensemble_name(c.e), " ", c.k1, c.k2, c.n1, c.n2);
    CHECK(quad * moment_sign(q) * sgn(b) > 0);
  }
}
