#pragma once

#include <vector>

#include "cpmoments/haar.hpp"

namespace cpmom {

// Taylor coefficients of det(I - A s) about s = 1 through degree `order`,
// built by convolving the per-pair factors (2-2cos t) + (2-2cos t)(s-1)
// + (s-1)^2 and the fixed-eigenvalue factors. For Sp and SO every jet
// coefficient is nonnegative, so the convolution never cancels.
std::vector<double> char_poly_jet(const std::vector<double>& angles,
                                  const std::vector<int>& fixed_eigs, unsigned order);

// Lambda^{(n)}(1) for each requested derivative order n; orders above the
// polynomial degree 2N give exactly 0.
std::vector<double> char_derivs_at_one(const HaarSample& sample,
                                       const std::vector<unsigned>& orders);

}  // namespace cpmom
