#pragma once

#include <vector>

#include "cpmoments/rational.hpp"

namespace cpmom {

// Polynomial in one formal variable u truncated at a fixed degree M.
// coeffs()[j] is the coefficient of u^j for 0 <= j <= M. Ring operations
// discard everything above degree M; operands with different truncation
// degrees are rejected.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(unsigned truncation_degree)
      : coeffs_(truncation_degree + 1, Rational(0)) {}
  explicit TruncatedSeries(std::vector<Rational> coeffs);

  static TruncatedSeries zero(unsigned truncation_degree) {
    return TruncatedSeries(truncation_degree);
  }
  static TruncatedSeries one(unsigned truncation_degree) {
    TruncatedSeries s(truncation_degree);
    s.coeffs_[0] = 1;
    return s;
  }
  static TruncatedSeries constant(const Rational& c, unsigned truncation_degree) {
    TruncatedSeries s(truncation_degree);
    s.coeffs_[0] = c;
    return s;
  }

  unsigned truncation_degree() const { return static_cast<unsigned>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& coeff(unsigned j) const { return coeffs_.at(j); }
  Rational& coeff(unsigned j) { return coeffs_.at(j); }

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  TruncatedSeries operator*(const TruncatedSeries& o) const;
  TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }
  TruncatedSeries& operator*=(const Rational& c);

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  bool operator==(const TruncatedSeries& o) const { return coeffs_ == o.coeffs_; }

 private:
  std::vector<Rational> coeffs_;
};

// Degree-M truncation of the series with u^j coefficient 1 / (j! (m+2j)!)
// when m + 2j >= 0 and 0 otherwise; negative factorial arguments are read
// as 1/Gamma(nonpositive integer) = 0. m may be negative.
TruncatedSeries hypergeometric_series(long m, unsigned truncation_degree);

// Determinant of a square matrix over the truncated-series ring, by
// Laplace expansion over column subsets with memoized minors. Division
// free. Entries must all share one truncation degree; k >= 1.
TruncatedSeries series_det(const std::vector<std::vector<TruncatedSeries>>& entries);

}  // namespace cpmom
