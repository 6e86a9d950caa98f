#pragma once

#include "cpmoments/coefficients.hpp"

namespace cpmom {

// Exact-density moment of (Lambda^{(n1)}(1))^{k1} (Lambda^{(n2)}(1))^{k2}
// at matrix size 2N, by adaptive quadrature over the eigenangle density.
// Ground truth for the Monte Carlo engine; only N <= 2 is supported.
//
// Densities used (normalization computed numerically), angles on [0, pi]:
//   Sp(2N):     prod_{i<j} (cos t_i - cos t_j)^2 * prod_i sin^2 t_i
//   SO(2N):     prod_{i<j} (cos t_i - cos t_j)^2
//   O^-(2N):    fixed eigenvalues {+1, -1} plus N-1 angles with the
//               Sp-type density above.
double weyl_quadrature_moment(Ensemble ensemble, unsigned N, unsigned k1, unsigned k2,
                              unsigned n1, unsigned n2);

}  // namespace cpmom
