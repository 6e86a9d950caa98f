#pragma once

#include <stdexcept>
#include <string>

#include "cpmoments/rational.hpp"

namespace cpmom {

enum class Ensemble { Sp, SO, OMinus };
enum class Backend { Det, Comb };
enum class FormulaTag { Det, Comb, OMinusReduction, ClosedForm };

std::string ensemble_name(Ensemble e);

// Identifies one leading-order coefficient: the constant b such that the
// Haar average of (d^{n1}/ds^{n1} det(I-As)|_{s=1})^{k1} * (n2 analogue)^{k2}
// grows like b * (2N)^exponent, up to the ensemble sign convention below.
struct CoeffQuery {
  Ensemble ensemble = Ensemble::Sp;
  unsigned k1 = 0, k2 = 0;
  unsigned n1 = 0, n2 = 0;
};

struct InvalidQuery : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Throws InvalidQuery naming the violated invariant. Requires
// 0 <= n1 <= n2, k1 and k2 not both zero, and n1 >= 1 for OMinus.
void validate(const CoeffQuery& q);

// Power of (2N) in the leading term:
//   Sp:     k(k+1)/2 + k1 n1 + k2 n2
//   SO:     k(k-1)/2 + k1 n1 + k2 n2
//   OMinus: k(k+1)/2 + k1 (n1-1) + k2 (n2-1)
unsigned scaling_exponent(const CoeffQuery& q);

struct CoeffResult {
  Rational value;
  unsigned exponent = 0;
  FormulaTag formula = FormulaTag::Det;
};

// Determinantal route: outer sums over weak compositions of k1 and k2
// against the derivative-order tuples, inner sum over splittings of the
// higher orders, with the value read off a truncated-series determinant
// of hypergeometric entries. Sp and SO only.
CoeffResult leading_coeff_det(const CoeffQuery& q);

// Combinatorial route: streams row-bounded matrices, columns sums V_j,
// factorial weights and the pairwise product over i < j. Sp and SO only.
CoeffResult leading_coeff_comb(const CoeffQuery& q);

// OMinus reduces to the Sp coefficient at orders (n1-1, n2-1):
// (-1)^{k1(n1-1)+k2(n2-1)} * 2^k * n1^{k1} * n2^{k2} * b_Sp(n1-1, n2-1),
// computed with the requested backend.
CoeffResult leading_coeff_ominus(const CoeffQuery& q, Backend backend);

// Dispatcher over ensembles and backends.
CoeffResult leading_coeff(const CoeffQuery& q, Backend backend);

// First moments in closed form, n >= 1:
//   Sp: (-1)^n / (2(n+1)),  SO: 1.
Rational first_moment_closed_form(Ensemble e, unsigned n);

// Sign relating the coefficient normalization to raw moments of
// d/ds-derivatives of det(I-As) at s=1. The coefficients track
// derivatives of the shifted averages with respect to the shift, whose
// direction convention differs per ensemble:
//   Sp:     (-1)^{k1 n1 + k2 n2}
//   SO:     +1
//   OMinus: (-1)^{k1 + k2}
// Checked against exact small-N quadrature in the test suite.
int moment_sign(const CoeffQuery& q);

}  // namespace cpmom
