#include "cpmoments/identity_checks.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "cpmoments/enumeration.hpp"
#include "cpmoments/philox.hpp"
#include "cpmoments/series.hpp"

namespace cpmom {

namespace {

using Window = std::vector<std::pair<int, int>>;

// prod_{1 <= i < j <= k} (w_i^p - w_j^p)
MultiLaurent vandermonde(const Window& win, unsigned k, int p) {
  MultiLaurent acc = MultiLaurent::one(win);
  for (unsigned i = 0; i < k; ++i) {
    for (unsigned j = i + 1; j < k; ++j) {
      MultiLaurent factor(win);
      std::vector<int> e(k, 0);
      e[i] = p;
      factor.add_term(e, FormalPolyN::constant(Rational(1)));
      e[i] = 0;
      e[j] = p;
      factor.add_term(e, FormalPolyN::constant(Rational(-1)));
      acc = acc * factor;
    }
  }
  return acc;
}

// prod_v sum_{t=0}^{order} N^t w_v^t / t!
MultiLaurent exp_factor(const Window& win, unsigned k, const std::vector<int>& order) {
  MultiLaurent acc = MultiLaurent::one(win);
  for (unsigned v = 0; v < k; ++v) {
    MultiLaurent f(win);
    std::vector<int> e(k, 0);
    for (int t = 0; t <= order[v]; ++t) {
      e[v] = t;
      f.add_term(e, FormalPolyN::monomial(make_rational(1, factorial(t)), t));
    }
    acc = acc * f;
  }
  return acc;
}

// (sum_v w_v^{-2j})^m
MultiLaurent power_sum_pow(const Window& win, unsigned k, unsigned j, unsigned m) {
  MultiLaurent base(win);
  std::vector<int> e(k, 0);
  for (unsigned v = 0; v < k; ++v) {
    e[v] = -2 * static_cast<int>(j);
    base.add_term(e, FormalPolyN::constant(Rational(1)));
    e[v] = 0;
  }
  MultiLaurent acc = MultiLaurent::one(win);
  for (unsigned c = 0; c < m; ++c) acc = acc * base;
  return acc;
}

std::string render_tuple(const std::vector<unsigned>& t) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
  os << ")";
  return os.str();
}

std::string render_tuple(const std::vector<int>& t) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
  os << ")";
  return os.str();
}

// Series-determinant side of the contour identity: sum over splittings of
// m_s (s >= 2) into k parts of the multinomial times the m_1-th series
// coefficient of det(g_{2i-j+shift+2 c_i}(u)) scaled by m_1!.
Rational det_side(unsigned k, const std::vector<unsigned>& m_tuple, int shift) {
  const unsigned n = static_cast<unsigned>(m_tuple.size());
  const unsigned m1 = n >= 1 ? m_tuple[0] : 0;

  std::vector<std::vector<std::vector<unsigned>>> split_lists;
  for (unsigned s = 2; s <= n; ++s)
    split_lists.push_back(enum_weak_compositions(m_tuple[s - 1], k));

  Rational total(0);
  std::vector<std::size_t> odo(split_lists.size(), 0);
  while (true) {
    Integer mult = 1;
    std::vector<long> c(k, 0);
    for (std::size_t t = 0; t < split_lists.size(); ++t) {
      const unsigned s = static_cast<unsigned>(t) + 2;
      const auto& parts = split_lists[t][odo[t]];
      mult *= multinomial(m_tuple[s - 1], parts);
      for (unsigned i = 0; i < k; ++i) c[i] += static_cast<long>(s) * parts[i];
    }
    std::vector<std::vector<TruncatedSeries>> mat;
    for (unsigned i = 1; i <= k; ++i) {
      std::vector<TruncatedSeries> row;
      for (unsigned j = 1; j <= k; ++j)
        row.push_back(hypergeometric_series(2L * i - j + shift + 2 * c[i - 1], m1));
      mat.push_back(std::move(row));
    }
    total += Rational(mult) * series_det(mat).coeff(m1) * factorial(m1);

    bool carried = false;
    for (std::size_t t = split_lists.size(); t-- > 0;) {
      if (++odo[t] < split_lists[t].size()) {
        carried = true;
        break;
      }
      odo[t] = 0;
    }
    if (!carried) break;
  }
  return total;
}

int permutation_parity(const std::vector<unsigned>& perm) {
  int inv = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

Rational inv_gamma(long arg) {
  if (arg <= 0) return Rational(0);
  return make_rational(1, factorial(static_cast<unsigned>(arg - 1)));
}

}  // namespace

CheckResult check_contour_det_identity(unsigned k, const std::vector<unsigned>& m_tuple) {
  CheckResult res;
  res.identity = "contour_det";
  res.params = "k=" + std::to_string(k) + " m=" + render_tuple(m_tuple);

  int weight = 0;
  for (std::size_t j = 0; j < m_tuple.size(); ++j)
    weight += static_cast<int>(j + 1) * static_cast<int>(m_tuple[j]);

  const int hi = 2 * static_cast<int>(k) - 1 + 2 * weight;
  const Window win(k, {-2 * weight, hi});

  MultiLaurent integrand = MultiLaurent::one(win);
  for (std::size_t j = 0; j < m_tuple.size(); ++j)
    integrand = integrand * power_sum_pow(win, k, static_cast<unsigned>(j + 1), m_tuple[j]);
  integrand = integrand * vandermonde(win, k, 1);
  integrand = integrand * vandermonde(win, k, 2);
  integrand = integrand * exp_factor(win, k, std::vector<int>(k, hi));

  const long kk = k;
  const int sign = (kk * (kk - 1) / 2) % 2 == 0 ? 1 : -1;
  Rational prefactor = Rational(factorial(k)) * sign;

  for (int variant = 0; variant < 2; ++variant) {
    // variant 0: divisor w^{2k}, entries g_{2i-j+...}, exponent k(k+1)/2.
    // variant 1: divisor w^{2k-1}, entries g_{2i-j-1+...}, exponent k(k-1)/2.
    const int divisor = 2 * static_cast<int>(k) - variant;
    FormalPolyN lhs = contour_extract(integrand, std::vector<int>(k, divisor));

    const unsigned nexp = static_cast<unsigned>(
        (variant == 0 ? kk * (kk + 1) / 2 : kk * (kk - 1) / 2) + 2 * weight);
    FormalPolyN rhs = FormalPolyN::monomial(
        prefactor * det_side(k, m_tuple, variant == 0 ? 0 : -1), nexp);

    if (!(lhs == rhs)) {
      res.pass = false;
      res.witness = "divisor_offset=" + std::to_string(variant) +
                    " lhs=" + lhs.to_string() + " rhs=" + rhs.to_string();
      return res;
    }
  }
  res.pass = true;
  return res;
}

CheckResult check_contour_gamma_identity(unsigned k, const std::vector<int>& m_vec) {
  CheckResult res;
  res.identity = "contour_gamma";
  res.params = "k=" + std::to_string(k) + " m=" + render_tuple(m_vec);

  std::vector<int> targets(k);
  int hi = 0;
  for (unsigned v = 0; v < k; ++v) {
    targets[v] = 2 * static_cast<int>(k) + m_vec[v];
    hi = std::max(hi, targets[v] - 1);
  }
  const Window win(k, {0, hi});

  FormalPolyN lhs;
  const bool reachable =
      std::all_of(targets.begin(), targets.end(), [](int d) { return d >= 1; });
  if (reachable) {
    std::vector<int> order(k);
    for (unsigned v = 0; v < k; ++v) order[v] = targets[v] - 1;
    MultiLaurent integrand = vandermonde(win, k, 1) * vandermonde(win, k, 2);
    integrand = integrand * exp_factor(win, k, order);
    lhs = contour_extract(integrand, targets);
  }

  FormalPolyN rhs;
  std::vector<unsigned> perm(k);
  std::iota(perm.begin(), perm.end(), 0u);
  do {
    // det over entries N^{2k+m_{perm(i)}-2i-j+2} / Gamma(2k+m_{perm(i)}-2i-j+3)
    std::vector<unsigned> inner(k);
    std::iota(inner.begin(), inner.end(), 0u);
    do {
      Rational coef(permutation_parity(inner));
      long nexp = 0;
      bool zero = false;
      for (unsigned i = 1; i <= k; ++i) {
        const unsigned j = inner[i - 1] + 1;
        const long arg =
            2L * k + m_vec[perm[i - 1]] - 2L * i - j + 3;
        Rational g = inv_gamma(arg);
        if (sgn(g) == 0) {
          zero = true;
          break;
        }
        coef *= g;
        nexp += arg - 1;
      }
      if (!zero) rhs += FormalPolyN::monomial(coef, static_cast<unsigned>(nexp));
    } while (std::next_permutation(inner.begin(), inner.end()));
  } while (std::next_permutation(perm.begin(), perm.end()));

  res.pass = lhs == rhs;
  if (!res.pass)
    res.witness = "lhs=" + lhs.to_string() + " rhs=" + rhs.to_string();
  return res;
}

namespace {

// Truncated series in the shift variable, coefficients rational.
using ShiftSeries = std::vector<Rational>;

ShiftSeries mul_truncated(const ShiftSeries& a, const ShiftSeries& b, unsigned order) {
  ShiftSeries r(order + 1, Rational(0));
  for (unsigned i = 0; i <= order && i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (unsigned j = 0; i + j <= order && j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

// Route one: expand e^{-N a} / prod (w_i^2 - a^2) directly to order n.
Rational direct_shift_derivative(const std::vector<Rational>& w, const Rational& bigN,
                                 unsigned n) {
  ShiftSeries acc(n + 1, Rational(0));
  for (unsigned t = 0; t <= n; ++t)
    acc[t] = pow_rational(-bigN, t) / Rational(factorial(t));
  for (const Rational& wi : w) {
    const Rational w2inv = Rational(1) / (wi * wi);
    ShiftSeries geom(n + 1, Rational(0));
    for (unsigned t = 0; 2 * t <= n; ++t)
      geom[2 * t] = pow_rational(w2inv, t + 1);
    acc = mul_truncated(acc, geom, n);
  }
  return acc[n] * factorial(n);
}

// Route two: binomial sum over even compositions.
Rational composition_shift_derivative(const std::vector<Rational>& w, const Rational& bigN,
                                      unsigned n) {
  const unsigned k = static_cast<unsigned>(w.size());
  Rational prefix(1);
  for (const Rational& wi : w) prefix /= wi * wi;

  Rational total(0);
  for (unsigned m = 0; m <= n; m += 2) {
    Rational inner(0);
    for (const auto& half : enum_weak_compositions(m / 2, k)) {
      Rational term(1);
      for (unsigned i = 0; i < k; ++i)
        term /= pow_rational(w[i], 2 * half[i]);
      inner += term;
    }
    total += Rational(binomial(n, m)) * pow_rational(-bigN, n - m) *
             Rational(factorial(m)) * inner;
  }
  return prefix * total;
}

// Route three: sum over order splits with only even higher parts.
Rational order_split_shift_derivative(const std::vector<Rational>& w, const Rational& bigN,
                                      unsigned n) {
  const unsigned k = static_cast<unsigned>(w.size());
  Rational prefix(1);
  for (const Rational& wi : w) prefix /= wi * wi;

  std::vector<Rational> psums(n / 2 + 1, Rational(0));  // psums[j] = sum w_i^{-2j}
  for (unsigned j = 1; 2 * j <= n; ++j)
    for (unsigned i = 0; i < k; ++i)
      psums[j] += Rational(1) / pow_rational(w[i], 2 * j);

  Rational total(0);
  for (const auto& t : enum_deriv_tuples(n)) {
    Rational term = make_rational(factorial(n), t.tuple_factorial());
    term *= pow_rational(-bigN, t.a0);
    for (unsigned j = 1; j <= t.higher.size(); ++j)
      term *= pow_rational(psums[j] / Rational(j), t.higher[j - 1]);
    total += term;
  }
  return prefix * total;
}

}  // namespace

CheckResult check_shift_derivative_identities(unsigned n_max, unsigned k_max,
                                              unsigned trials, std::uint64_t seed) {
  CheckResult res;
  res.identity = "shift_derivatives";
  res.params = "n<=" + std::to_string(n_max) + " k<=" + std::to_string(k_max) +
               " trials=" + std::to_string(trials) + " seed=" + std::to_string(seed);

  Philox4x32 rng(seed, /*stream=*/0);
  auto draw_rational = [&rng]() {
    long num = 0;
    while (num == 0) num = static_cast<long>(rng.next_u32() % 19) - 9;
    long den = 1 + static_cast<long>(rng.next_u32() % 4);
    return make_rational(num, den);
  };

  for (unsigned trial = 0; trial < trials; ++trial) {
    for (unsigned k = 1; k <= k_max; ++k) {
      std::vector<Rational> w;
      while (w.size() < k) {
        Rational cand = draw_rational();
        bool dup = false;
        for (const auto& x : w) dup = dup || x * x == cand * cand;
        if (!dup) w.push_back(cand);
      }
      const Rational bigN = draw_rational();
      for (unsigned n = 0; n <= n_max; ++n) {
        const Rational a = direct_shift_derivative(w, bigN, n);
        const Rational b = composition_shift_derivative(w, bigN, n);
        const Rational c = order_split_shift_derivative(w, bigN, n);
        if (!(a == b && b == c)) {
          res.pass = false;
          std::ostringstream os;
          os << "trial=" << trial << " k=" << k << " n=" << n
             << " direct=" << to_string(a) << " composition=" << to_string(b)
             << " order_split=" << to_string(c);
          res.witness = os.str();
          return res;
        }
      }
    }
  }
  res.pass = true;
  return res;
}

CheckResult check_gamma_determinant(unsigned k, const std::vector<unsigned>& m_vec) {
  CheckResult res;
  res.identity = "gamma_det";
  res.params = "k=" + std::to_string(k) + " m=" + render_tuple(m_vec);

  Rational lhs(0);
  std::vector<unsigned> perm(k);
  std::iota(perm.begin(), perm.end(), 0u);
  do {
    Rational term(permutation_parity(perm));
    for (unsigned i = 1; i <= k; ++i) {
      const unsigned j = perm[i - 1] + 1;
      term *= inv_gamma(2L * k + m_vec[i - 1] - 2L * i - j + 2);
      if (sgn(term) == 0) break;
    }
    lhs += term;
  } while (std::next_permutation(perm.begin(), perm.end()));

  Rational rhs(1);
  for (unsigned j = 1; j <= k; ++j)
    rhs /= Rational(factorial(static_cast<unsigned>(2L * k + m_vec[j - 1] - 2L * j)));
  for (unsigned i = 1; i <= k; ++i)
    for (unsigned j = i + 1; j <= k; ++j)
      rhs *= Rational(static_cast<long>(m_vec[j - 1]) - m_vec[i - 1] - 2L * j + 2L * i);

  res.pass = lhs == rhs;
  if (!res.pass) res.witness = "lhs=" + to_string(lhs) + " rhs=" + to_string(rhs);
  return res;
}

std::vector<CheckResult> run_contour_det_suite(unsigned max_k, unsigned max_weight) {
  std::vector<CheckResult> out;
  for (unsigned k = 1; k <= max_k; ++k) {
    for (unsigned n = 1; n <= 2; ++n) {
      std::vector<unsigned> m(n, 0);
      auto rec = [&](auto&& self, unsigned j) -> void {
        if (j > n) {
          out.push_back(check_contour_det_identity(k, m));
          return;
        }
        unsigned weight = 0;
        for (unsigned t = 1; t <= n; ++t) weight += t * m[t - 1];
        for (unsigned v = 0; weight + j * v <= max_weight; ++v) {
          m[j - 1] = v;
          self(self, j + 1);
        }
        m[j - 1] = 0;
      };
      rec(rec, 1);
    }
  }
  return out;
}

std::vector<CheckResult> run_contour_gamma_suite(unsigned max_k, unsigned max_abs) {
  std::vector<CheckResult> out;
  const int lo = -static_cast<int>(max_abs), hi = static_cast<int>(max_abs);
  for (unsigned k = 1; k <= max_k; ++k) {
    std::vector<int> m(k, lo);
    while (true) {
      out.push_back(check_contour_gamma_identity(k, m));
      unsigned idx = k;
      while (idx > 0) {
        if (++m[idx - 1] <= hi) break;
        m[idx - 1] = lo;
        --idx;
      }
      if (idx == 0) break;
    }
  }
  return out;
}

std::vector<CheckResult> run_shift_derivative_suite(unsigned n_max, unsigned k_max,
                                                    unsigned trials, std::uint64_t seed) {
  return {check_shift_derivative_identities(n_max, k_max, trials, seed)};
}

std::vector<CheckResult> run_gamma_det_suite(unsigned max_k, unsigned max_entry) {
  std::vector<CheckResult> out;
  for (unsigned k = 1; k <= max_k; ++k) {
    std::vector<unsigned> m(k, 0);
    while (true) {
      out.push_back(check_gamma_determinant(k, m));
      unsigned idx = k;
      while (idx > 0) {
        if (++m[idx - 1] <= max_entry) break;
        m[idx - 1] = 0;
        --idx;
      }
      if (idx == 0) break;
    }
  }
  return out;
}

}  // namespace cpmom
