#include "cpmoments/series.hpp"

#include <stdexcept>

namespace cpmom {

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("TruncatedSeries: empty coefficient list");
}

namespace {
void require_same_degree(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.truncation_degree() != b.truncation_degree())
    throw std::invalid_argument("TruncatedSeries: mixed truncation degrees");
}
}  // namespace

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  require_same_degree(*this, o);
  for (unsigned j = 0; j < coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  require_same_degree(*this, o);
  for (unsigned j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= o.coeffs_[j];
  return *this;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
  require_same_degree(*this, o);
  const unsigned m = truncation_degree();
  TruncatedSeries r(m);
  for (unsigned i = 0; i <= m; ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (unsigned j = 0; i + j <= m; ++j) {
      if (sgn(o.coeffs_[j]) == 0) continue;
      r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  return r;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

TruncatedSeries hypergeometric_series(long m, unsigned truncation_degree) {
  TruncatedSeries s(truncation_degree);
  for (unsigned j = 0; j <= truncation_degree; ++j) {
    const long idx = m + 2 * static_cast<long>(j);
    if (idx < 0) continue;
    s.coeff(j) = make_rational(1, factorial(j) * factorial(static_cast<unsigned>(idx)));
  }
  return s;
}

TruncatedSeries series_det(const std::vector<std::vector<TruncatedSeries>>& entries) {
  const std::size_t k = entries.size();
  if (k == 0) throw std::invalid_argument("series_det: empty matrix");
  if (k > 31) throw std::invalid_argument("series_det: matrix too large");
  const unsigned m = entries[0][0].truncation_degree();
  for (const auto& row : entries) {
    if (row.size() != k) throw std::invalid_argument("series_det: matrix not square");
    for (const auto& e : row)
      if (e.truncation_degree() != m)
        throw std::invalid_argument("series_det: mixed truncation degrees");
  }

  // minors[mask] = det of the submatrix on rows 0..popcount(mask)-1 and
  // the column set encoded by mask. Filled in order of popcount, each
  // minor expanded along its last row.
  const std::size_t full = (std::size_t{1} << k) - 1;
  std::vector<TruncatedSeries> minors(full + 1, TruncatedSeries::zero(m));
  minors[0] = TruncatedSeries::one(m);
  for (std::size_t mask = 1; mask <= full; ++mask) {
    const unsigned r = static_cast<unsigned>(__builtin_popcountll(mask));
    TruncatedSeries acc = TruncatedSeries::zero(m);
    unsigned pos = 0;
    for (unsigned col = 0; col < k; ++col) {
      if (!(mask & (std::size_t{1} << col))) continue;
      TruncatedSeries term = entries[r - 1][col] * minors[mask ^ (std::size_t{1} << col)];
      if ((r - 1 + pos) % 2 == 0)
        acc += term;
      else
        acc -= term;
      ++pos;
    }
    minors[mask] = std::move(acc);
  }
  return minors[full];
}

}  // namespace cpmom
