#include "doctest.h"

#include "cpmoments/coefficients.hpp"

using namespace cpmom;

namespace {
Rational det_value(Ensemble e, unsigned k1, unsigned k2, unsigned n1, unsigned n2) {
  return leading_coeff_det({e, k1, k2, n1, n2}).value;
}
Rational comb_value(Ensemble e, unsigned k1, unsigned k2, unsigned n1, unsigned n2) {
  return leading_coeff_comb({e, k1, k2, n1, n2}).value;
}
}  // namespace

TEST_CASE("query validation") {
  CHECK_THROWS_AS(validate({Ensemble::Sp, 0, 0, 0, 0}), InvalidQuery);
  CHECK_THROWS_AS(validate({Ensemble::Sp, 1, 0, 3, 1}), InvalidQuery);
  CHECK_THROWS_AS(validate({Ensemble::OMinus, 0, 1, 0, 1}), InvalidQuery);
  CHECK_NOTHROW(validate({Ensemble::OMinus, 0, 1, 1, 1}));
  CHECK_NOTHROW(validate({Ensemble::Sp, 0, 1, 0, 0}));
}

TEST_CASE("scaling exponent") {
  CHECK(scaling_exponent({Ensemble::Sp, 1, 1, 0, 2}) == 5);
  for (unsigned n = 0; n <= 6; ++n)
    CHECK(scaling_exponent({Ensemble::SO, 0, 1, 0, n}) == n);
  CHECK(scaling_exponent({Ensemble::OMinus, 0, 1, 1, 1}) == 1);
  CHECK(scaling_exponent({Ensemble::Sp, 0, 1, 0, 3}) == 4);
  CHECK(scaling_exponent({Ensemble::SO, 1, 2, 0, 2}) == 7);
  CHECK(scaling_exponent({Ensemble::OMinus, 2, 0, 1, 2}) == 3);
}

TEST_CASE("determinant backend fixtures") {
  CHECK(det_value(Ensemble::Sp, 0, 1, 0, 3) == make_rational(-1, 8));
  CHECK(det_value(Ensemble::SO, 1, 1, 1, 1) == make_rational(1, 2));
  // n1 = n2 = 0 collapses every sum to the empty tuple
  CHECK(det_value(Ensemble::Sp, 0, 1, 0, 0) == make_rational(1, 2));
  CHECK(det_value(Ensemble::Sp, 1, 1, 0, 2) == make_rational(1, 80));
  CHECK(det_value(Ensemble::SO, 0, 1, 0, 0) == 2);
}

TEST_CASE("combinatorial backend fixtures") {
  CHECK(comb_value(Ensemble::Sp, 1, 1, 0, 2) == make_rational(1, 80));
  CHECK(comb_value(Ensemble::SO, 1, 2, 0, 2) == make_rational(19, 630));
  CHECK(comb_value(Ensemble::Sp, 0, 2, 0, 3) == make_rational(23, 13440));
  CHECK(comb_value(Ensemble::Sp, 0, 1, 0, 0) == make_rational(1, 2));
}

TEST_CASE("exponent carried by results") {
  auto r = leading_coeff_comb({Ensemble::Sp, 1, 1, 0, 2});
  CHECK(r.exponent == 5);
  CHECK(r.formula == FormulaTag::Comb);
  auto d = leading_coeff_det({Ensemble::Sp, 1, 1, 0, 2});
  CHECK(d.exponent == 5);
  CHECK(d.formula == FormulaTag::Det);
}

TEST_CASE("ominus reduction") {
  // 2 * b_Sp(0,1,0,0) = 1
  auto r = leading_coeff_ominus({Ensemble::OMinus, 0, 1, 1, 1}, Backend::Comb);
  CHECK(r.value == 1);
  CHECK(r.exponent == 1);
  CHECK(r.formula == FormulaTag::OMinusReduction);
  CHECK(leading_coeff_ominus({Ensemble::OMinus, 0, 1, 1, 1}, Backend::Det).value == 1);

  // (-1)^3 * 2 * 4 * b_Sp(0,1,0,3) = -8 * (-1/8) = 1
  CHECK(leading_coeff_ominus({Ensemble::OMinus, 0, 1, 1, 4}, Backend::Comb).value == 1);

  // 4 * b_Sp(2,0,0,1), both backends must agree
  auto c = leading_coeff_ominus({Ensemble::OMinus, 2, 0, 1, 2}, Backend::Comb);
  auto d = leading_coeff_ominus({Ensemble::OMinus, 2, 0, 1, 2}, Backend::Det);
  CHECK(c.value == d.value);
  CHECK(c.value == make_rational(1, 6));

  CHECK_THROWS_AS(leading_coeff_ominus({Ensemble::OMinus, 0, 1, 0, 1}, Backend::Comb),
                  InvalidQuery);
}

TEST_CASE("closed-form first moments") {
  CHECK(first_moment_closed_form(Ensemble::Sp, 3) == make_rational(-1, 8));
  CHECK(first_moment_closed_form(Ensemble::Sp, 4) == make_rational(1, 10));
  CHECK(first_moment_closed_form(Ensemble::SO, 7) == 1);
  CHECK_THROWS_AS(first_moment_closed_form(Ensemble::Sp, 0), InvalidQuery);

  for (unsigned n = 1; n <= 20; ++n) {
    CHECK(comb_value(Ensemble::Sp, 0, 1, 0, n) == first_moment_closed_form(Ensemble::Sp, n));
    CHECK(comb_value(Ensemble::SO, 0, 1, 0, n) == first_moment_closed_form(Ensemble::SO, n));
  }
}

TEST_CASE("cross-formula agreement on a small grid") {
  for (Ensemble e : {Ensemble::Sp, Ensemble::SO}) {
    for (unsigned k1 = 0; k1 <= 2; ++k1) {
      for (unsigned k2 = 0; k2 + k1 <= 2; ++k2) {
        if (k1 + k2 == 0) continue;
        for (unsigned n1 = 0; n1 <= 3; ++n1)
          for (unsigned n2 = n1; n2 <= 3; ++n2)
            CHECK(det_value(e, k1, k2, n1, n2) == comb_value(e, k1, k2, n1, n2));
      }
    }
  }
}

TEST_CASE("symmetry in the two derivative slots when n1 == n2") {
  for (Ensemble e : {Ensemble::Sp, Ensemble::SO})
    for (unsigned n = 0; n <= 3; ++n)
      for (unsigned k1 = 0; k1 <= 2; ++k1)
        for (unsigned k2 = 0; k2 <= 2; ++k2) {
          if (k1 + k2 == 0) continue;
          CHECK(comb_value(e, k1, k2, n, n) == comb_value(e, k2, k1, n, n));
        }
}

TEST_CASE("sign pattern over a small grid") {
  for (unsigned k1 = 0; k1 <= 2; ++k1)
    for (unsigned k2 = 0; k1 + k2 <= 3; ++k2) {
      if (k1 + k2 == 0) continue;
      for (unsigned n1 = 0; n1 <= 3; ++n1)
        for (unsigned n2 = n1; n2 <= 3; ++n2) {
          const Rational sp = comb_value(Ensemble::Sp, k1, k2, n1, n2);
          const int expected = (k1 * n1 + k2 * n2) % 2 == 0 ? 1 : -1;
          CHECK(sgn(sp) == expected);
          CHECK(sgn(comb_value(Ensemble::SO, k1, k2, n1, n2)) == 1);
        }
    }
}

TEST_CASE("moment sign convention") {
  CHECK(moment_sign({Ensemble::Sp, 0, 1, 0, 2}) == 1);
  CHECK(moment_sign({Ensemble::Sp, 0, 1, 0, 1}) == -1);
  CHECK(moment_sign({Ensemble::SO, 0, 1, 0, 1}) == 1);
  CHECK(moment_sign({Ensemble::OMinus, 0, 1, 1, 1}) == -1);
  CHECK(moment_sign({Ensemble::OMinus, 1, 1, 1, 1}) == 1);
}
