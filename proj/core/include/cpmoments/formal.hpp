#pragma once

#include <map>
#include <string>
#include <vector>

#include "cpmoments/rational.hpp"

namespace cpmom {

// Polynomial in a formal symbol N over the rationals, canonical: no
// trailing zero coefficients, so two equal polynomials compare equal.
class FormalPolyN {
 public:
  FormalPolyN() = default;
  static FormalPolyN monomial(Rational coeff, unsigned degree);
  static FormalPolyN constant(Rational c) { return monomial(std::move(c), 0); }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coeff(unsigned d) const {
    return d < coeffs_.size() ? coeffs_[d] : Rational(0);
  }

  FormalPolyN& operator+=(const FormalPolyN& o);
  FormalPolyN& operator-=(const FormalPolyN& o);
  FormalPolyN operator*(const FormalPolyN& o) const;
  FormalPolyN& operator*=(const Rational& c);
  FormalPolyN operator-() const;

  friend FormalPolyN operator+(FormalPolyN a, const FormalPolyN& b) { return a += b; }
  friend FormalPolyN operator-(FormalPolyN a, const FormalPolyN& b) { return a -= b; }
  bool operator==(const FormalPolyN&) const = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// Sparse Laurent data in k formal variables with a per-variable exponent
// window [lo_v, hi_v]. Coefficients are FormalPolyN. Multiplication
// truncates to the window, so factors must be multiplied negative-range
// first when coefficients outside the window matter along the way.
class MultiLaurent {
 public:
  explicit MultiLaurent(std::vector<std::pair<int, int>> window);

  std::size_t var_count() const { return window_.size(); }
  const std::vector<std::pair<int, int>>& window() const { return window_; }

  static MultiLaurent one(std::vector<std::pair<int, int>> window);

  // Adds coeff * prod w_v^{exps[v]}; out-of-window terms are rejected.
  void add_term(const std::vector<int>& exps, FormalPolyN coeff);

  FormalPolyN coefficient(const std::vector<int>& exps) const;

  MultiLaurent operator*(const MultiLaurent& o) const;
  MultiLaurent& operator+=(const MultiLaurent& o);

  std::size_t term_count() const { return terms_.size(); }
  const std::map<std::vector<int>, FormalPolyN>& terms() const { return terms_; }

 private:
  bool in_window(const std::vector<int>& exps) const;
  std::vector<std::pair<int, int>> window_;
  std::map<std::vector<int>, FormalPolyN> terms_;
};

// Value of (1/2 pi i)^k of the closed contour integrals of
// integrand * prod dw_v / w_v^{d_v}, i.e. the coefficient of
// prod w_v^{d_v - 1}. The window must cover d_v - 1.
FormalPolyN contour_extract(const MultiLaurent& integrand,
                            const std::vector<int>& divisor_exponents);

}  // namespace cpmom
