#include "cpmoments/formal.hpp"

#include <sstream>
#include <stdexcept>

namespace cpmom {

FormalPolyN FormalPolyN::monomial(Rational coeff, unsigned degree) {
  FormalPolyN p;
  if (sgn(coeff) != 0) {
    p.coeffs_.assign(degree + 1, Rational(0));
    p.coeffs_[degree] = std::move(coeff);
  }
  return p;
}

void FormalPolyN::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

FormalPolyN& FormalPolyN::operator+=(const FormalPolyN& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

FormalPolyN& FormalPolyN::operator-=(const FormalPolyN& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

FormalPolyN FormalPolyN::operator*(const FormalPolyN& o) const {
  FormalPolyN r;
  if (is_zero() || o.is_zero()) return r;
  r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  r.trim();
  return r;
}

FormalPolyN& FormalPolyN::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

FormalPolyN FormalPolyN::operator-() const {
  FormalPolyN r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

std::string FormalPolyN::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t d = coeffs_.size(); d-- > 0;) {
    if (sgn(coeffs_[d]) == 0) continue;
    if (!first) os << " + ";
    os << cpmom::to_string(coeffs_[d]);
    if (d > 0) os << "*N^" << d;
    first = false;
  }
  return os.str();
}

MultiLaurent::MultiLaurent(std::vector<std::pair<int, int>> window)
    : window_(std::move(window)) {
  for (const auto& [lo, hi] : window_)
    if (lo > hi) throw std::invalid_argument("MultiLaurent: empty window");
}

MultiLaurent MultiLaurent::one(std::vector<std::pair<int, int>> window) {
  MultiLaurent m(std::move(window));
  m.add_term(std::vector<int>(m.var_count(), 0), FormalPolyN::constant(Rational(1)));
  return m;
}

bool MultiLaurent::in_window(const std::vector<int>& exps) const {
  for (std::size_t v = 0; v < window_.size(); ++v)
    if (exps[v] < window_[v].first || exps[v] > window_[v].second) return false;
  return true;
}

void MultiLaurent::add_term(const std::vector<int>& exps, FormalPolyN coeff) {
  if (exps.size() != window_.size())
    throw std::invalid_argument("MultiLaurent: exponent arity mismatch");
  if (!in_window(exps))
    throw std::invalid_argument("MultiLaurent: term outside the window");
  if (coeff.is_zero()) return;
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(exps, std::move(coeff));
  } else {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FormalPolyN MultiLaurent::coefficient(const std::vector<int>& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? FormalPolyN() : it->second;
}

MultiLaurent MultiLaurent::operator*(const MultiLaurent& o) const {
  if (o.window_ != window_)
    throw std::invalid_argument("MultiLaurent: window mismatch in product");
  MultiLaurent r(window_);
  std::vector<int> e(window_.size());
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      bool ok = true;
      for (std::size_t v = 0; v < e.size(); ++v) {
        e[v] = ea[v] + eb[v];
        if (e[v] < window_[v].first || e[v] > window_[v].second) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;  // truncated to the window
      FormalPolyN prod = ca * cb;
      if (prod.is_zero()) continue;
      auto it = r.terms_.find(e);
      if (it == r.terms_.end()) {
        r.terms_.emplace(e, std::move(prod));
      } else {
        it->second += prod;
        if (it->second.is_zero()) r.terms_.erase(it);
      }
    }
  }
  return r;
}

MultiLaurent& MultiLaurent::operator+=(const MultiLaurent& o) {
  if (o.window_ != window_)
    throw std::invalid_argument("MultiLaurent: window mismatch in sum");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

FormalPolyN contour_extract(const MultiLaurent& integrand,
                            const std::vector<int>& divisor_exponents) {
  if (divisor_exponents.size() != integrand.var_count())
    throw std::invalid_argument("contour_extract: arity mismatch");
  std::vector<int> target(divisor_exponents.size());
  for (std::size_t v = 0; v < target.size(); ++v) {
    target[v] = divisor_exponents[v] - 1;
    const auto& [lo, hi] = integrand.window()[v];
    if (target[v] < lo || target[v] > hi)
      throw std::invalid_argument(
          "contour_extract: window does not cover the requested exponent");
  }
  return integrand.coefficient(target);
}

}  // namespace cpmom
