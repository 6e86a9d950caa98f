#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cpmoments/formal.hpp"

namespace cpmom {

struct CheckResult {
  bool pass = false;
  std::string identity;
  std::string params;
  std::string witness;  // empty on pass, both sides rendered on failure
};

// Contour average of Delta(w) Delta(w^2) e^{N sum w_i} prod_j (sum_i
// w_i^{-2j})^{m_j} against dw_i / w_i^{2k} (and / w_i^{2k-1}), expanded
// exactly over Q[N] and compared with the series-determinant closed form.
// Both divisor variants are checked.
CheckResult check_contour_det_identity(unsigned k, const std::vector<unsigned>& m_tuple);

// Contour average of Delta(w) Delta(w^2) e^{N sum w_i} / prod_j
// w_j^{2k+m_j} against the permutation sum of Gamma-reciprocal
// determinants. Entries of m_vec may be negative.
CheckResult check_contour_gamma_identity(unsigned k, const std::vector<int>& m_vec);

// Derivatives of e^{-N a} / prod_i (w_i^2 - a^2) at a = 0 computed three
// ways (direct truncated series, even-composition formula, order-split
// formula) on random rational points; requires threefold exact equality
// for every n <= n_max and k <= k_max.
CheckResult check_shift_derivative_identities(unsigned n_max, unsigned k_max,
                                              unsigned trials, std::uint64_t seed);

// det(1/Gamma(2k+m_i-2i-j+2)) against the factored closed form
// prod_j 1/(2k+m_j-2j)! * prod_{i<j} (m_j - m_i - 2j + 2i).
CheckResult check_gamma_determinant(unsigned k, const std::vector<unsigned>& m_vec);

// Declared verification grids, one CheckResult per parameter point.
std::vector<CheckResult> run_contour_det_suite(unsigned max_k, unsigned max_weight);
std::vector<CheckResult> run_contour_gamma_suite(unsigned max_k, unsigned max_abs);
std::vector<CheckResult> run_shift_derivative_suite(unsigned n_max, unsigned k_max,
                                                    unsigned trials, std::uint64_t seed);
std::vector<CheckResult> run_gamma_det_suite(unsigned max_k, unsigned max_entry);

}  // namespace cpmom
