#include "cpmoments/render.hpp"

#include <utility>
#include <vector>

namespace cpmom {

namespace {

std::vector<std::pair<Integer, unsigned>> trial_factor(Integer n) {
  std::vector<std::pair<Integer, unsigned>> factors;
  Integer p = 2;
  while (p * p <= n) {
    if (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      unsigned e = 0;
      while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
        n /= p;
        ++e;
      }
      factors.emplace_back(p, e);
    }
    if (p == 2)
      p = 3;
    else
      p += 2;
  }
  if (n > 1) factors.emplace_back(n, 1);
  return factors;
}

std::string render_factors(const std::vector<std::pair<Integer, unsigned>>& factors) {
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += "*";
    out += factors[i].first.get_str();
    if (factors[i].second > 1) out += "^" + std::to_string(factors[i].second);
  }
  return out;
}

}  // namespace

std::string factored_string(const Integer& n) {
  if (n == 0) return "0";
  if (n == 1) return "1";
  if (n == -1) return "-1";
  Integer a = abs(n);
  std::string body = render_factors(trial_factor(a));
  return (sgn(n) < 0 ? "-" : "") + body;
}

std::string factored_string(const Rational& q) {
  if (sgn(q) == 0) return "0";
  std::string num = factored_string(q.get_num());
  if (q.get_den() == 1) return num;
  auto den_factors = trial_factor(q.get_den());
  std::string den = render_factors(den_factors);
  if (den_factors.size() > 1 || den_factors[0].second > 1) den = "(" + den + ")";
  return num + "/" + den;
}

}  // namespace cpmom
