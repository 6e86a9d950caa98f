#include "doctest.h"

#include "cpmoments/identity_checks.hpp"

using namespace cpmom;

TEST_CASE("contour determinant identity, hand-checked points") {
  // k=1, m=(0): both sides are N for the first divisor; the second
  // divisor gives the constant 1 (coefficient of w^0 in e^{Nw}).
  CHECK(check_contour_det_identity(1, {0}).pass);
  // k=1, m=(1): both sides N^3 * (1/6) for the first divisor.
  CHECK(check_contour_det_identity(1, {1}).pass);
  // k=2, empty higher structure
  CHECK(check_contour_det_identity(2, {0}).pass);
  // with an s=2 splitting in play
  CHECK(check_contour_det_identity(2, {1, 1}).pass);
  CHECK(check_contour_det_identity(1, {3}).pass);
}

TEST_CASE("contour determinant suite, declared grid") {
  auto results = run_contour_det_suite(2, 3);
  CHECK(results.size() > 10);
  for (const auto& r : results) {
    INFO(r.params, " ", r.witness);
    CHECK(r.pass);
  }
}

TEST_CASE("contour gamma identity, hand-checked points") {
  // k=1, m=0: coefficient of w^1 in e^{Nw} is N; the Gamma side gives
  // N^1/Gamma(2).
  CHECK(check_contour_gamma_identity(1, {0}).pass);
  // k=1, m=-1: both sides 1
  CHECK(check_contour_gamma_identity(1, {-1}).pass);
  // k=1, m=-2: both sides vanish
  CHECK(check_contour_gamma_identity(1, {-2}).pass);
  CHECK(check_contour_gamma_identity(2, {0, 0}).pass);
  CHECK(check_contour_gamma_identity(3, {2, -1, 4}).pass);
}

TEST_CASE("contour gamma suite at k <= 2") {
  for (const auto& r : run_contour_gamma_suite(2, 4)) {
    INFO(r.params, " ", r.witness);
    CHECK(r.pass);
  }
}

TEST_CASE("shift derivative identities") {
  auto r = check_shift_derivative_identities(6, 3, 12, 2024);
  INFO(r.witness);
  CHECK(r.pass);
}

TEST_CASE("gamma determinant closed form") {
  CHECK(check_gamma_determinant(1, {0}).pass);
  CHECK(check_gamma_determinant(2, {0, 0}).pass);
  CHECK(check_gamma_determinant(3, {4, 1, 6}).pass);
  CHECK(check_gamma_determinant(5, {6, 0, 3, 2, 5}).pass);
  for (const auto& r : run_gamma_det_suite(3, 4)) {
    INFO(r.params, " ", r.witness);
    CHECK(r.pass);
  }
}
