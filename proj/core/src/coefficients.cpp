#include "cpmoments/coefficients.hpp"

#include <map>

#include "cpmoments/enumeration.hpp"
#include "cpmoments/series.hpp"

namespace cpmom {

std::string ensemble_name(Ensemble e) {
  switch (e) {
    case Ensemble::Sp: return "sp";
    case Ensemble::SO: return "so";
    case Ensemble::OMinus: return "ominus";
  }
  return "?";
}

void validate(const CoeffQuery& q) {
  if (q.k1 == 0 && q.k2 == 0)
    throw InvalidQuery("invalid query: k1 and k2 must not both be zero");
  if (q.n1 > q.n2)
    throw InvalidQuery("invalid query: requires n1 <= n2");
  if (q.ensemble == Ensemble::OMinus && q.n1 < 1)
    throw InvalidQuery("invalid query: ominus requires n1 >= 1");
}

unsigned scaling_exponent(const CoeffQuery& q) {
  validate(q);
  const unsigned k = q.k1 + q.k2;
  switch (q.ensemble) {
    case Ensemble::Sp:
      return k * (k + 1) / 2 + q.k1 * q.n1 + q.k2 * q.n2;
    case Ensemble::SO:
      return k * (k - 1) / 2 + q.k1 * q.n1 + q.k2 * q.n2;
    case Ensemble::OMinus:
      return k * (k + 1) / 2 + q.k1 * (q.n1 - 1) + q.k2 * (q.n2 - 1);
  }
  throw InvalidQuery("invalid query: unknown ensemble");
}

int moment_sign(const CoeffQuery& q) {
  switch (q.ensemble) {
    case Ensemble::Sp:
      return (q.k1 * q.n1 + q.k2 * q.n2) % 2 == 0 ? 1 : -1;
    case Ensemble::SO:
      return 1;
    case Ensemble::OMinus:
      return (q.k1 + q.k2) % 2 == 0 ? 1 : -1;
  }
  return 1;
}

namespace {

void require_sp_or_so(const CoeffQuery& q, const char* what) {
  if (q.ensemble == Ensemble::OMinus)
    throw InvalidQuery(std::string(what) + ": ominus is served by the reduction formula");
}

// Weight of one composition u against the tuple list A at order n:
//   multinomial(|u|; u) * (n!)^{|u|} / prod_i (A_i!)^{u_i}
//   / prod_{j>=1} j^{sum_i u_i A_{i,j}}
// and the per-index totals sum_i u_i A_{i,j} that feed the m_j.
struct CompositionWeight {
  Rational weight;
  std::vector<unsigned> order_totals;  // index j-1 holds sum_i u_i a_{i,j}
};

CompositionWeight composition_weight(const std::vector<DerivTuple>& tuples,
                                     const std::vector<unsigned>& comp, unsigned k_part,
                                     unsigned n) {
  const unsigned half = n / 2;
  CompositionWeight out;
  out.order_totals.assign(half, 0);
  Integer denom = 1;
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    if (comp[i] == 0) continue;
    Integer tf = tuples[i].tuple_factorial();
    for (unsigned c = 0; c < comp[i]; ++c) denom *= tf;
    for (unsigned j = 1; j <= half; ++j)
      out.order_totals[j - 1] += comp[i] * tuples[i].higher[j - 1];
  }
  for (unsigned j = 2; j <= half; ++j) {
    Integer jp;
    mpz_ui_pow_ui(jp.get_mpz_t(), j, out.order_totals[j - 1]);
    denom *= jp;
  }
  Integer num = multinomial(k_part, comp);
  Integer nfac = factorial(n);
  for (unsigned c = 0; c < k_part; ++c) num *= nfac;
  out.weight = make_rational(std::move(num), std::move(denom));
  return out;
}

// (d/du)^{m1} of det(g_{offset(i,j)}(u)) at u = 0, with offset
// 2i - j + so_shift + 2*c_i (1-based i, j). Memoized on (c, m1) since
// many splittings share a column-offset vector.
struct DetCache {
  int shift;  // 0 for Sp, -1 for SO
  std::map<std::pair<std::vector<long>, unsigned>, Rational> memo;

  Rational eval(const std::vector<long>& c, unsigned m1) {
    auto key = std::make_pair(c, m1);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    const unsigned k = static_cast<unsigned>(c.size());
    std::vector<std::vector<TruncatedSeries>> mat;
    mat.reserve(k);
    for (unsigned i = 1; i <= k; ++i) {
      std::vector<TruncatedSeries> row;
      row.reserve(k);
      for (unsigned j = 1; j <= k; ++j)
        row.push_back(hypergeometric_series(2L * i - j + shift + 2 * c[i - 1], m1));
      mat.push_back(std::move(row));
    }
    Rational value = series_det(mat).coeff(m1) * factorial(m1);
    memo.emplace(std::move(key), value);
    return value;
  }
};

}  // namespace

CoeffResult leading_coeff_det(const CoeffQuery& q) {
  validate(q);
  require_sp_or_so(q, "leading_coeff_det");
  const unsigned k = q.k1 + q.k2;
  const unsigned half1 = q.n1 / 2, half2 = q.n2 / 2;

  const auto tuples1 = enum_deriv_tuples(q.n1);
  const auto tuples2 = enum_deriv_tuples(q.n2);
  const auto comps1 = enum_weak_compositions(q.k1, static_cast<unsigned>(tuples1.size()));
  const auto comps2 = enum_weak_compositions(q.k2, static_cast<unsigned>(tuples2.size()));

  DetCache cache{q.ensemble == Ensemble::SO ? -1 : 0, {}};

  Rational total(0);
  for (const auto& u : comps1) {
    const auto wa = composition_weight(tuples1, u, q.k1, q.n1);
    for (const auto& v : comps2) {
      const auto wb = composition_weight(tuples2, v, q.k2, q.n2);

      // m_j = (a contribution for j <= half1) + (b contribution for j <= half2)
      std::vector<unsigned> m(half2, 0);
      for (unsigned j = 1; j <= half2; ++j) {
        unsigned mj = wb.order_totals[j - 1];
        if (j <= half1) mj += wa.order_totals[j - 1];
        m[j - 1] = mj;
      }
      const unsigned m1 = half2 >= 1 ? m[0] : 0;

      // Splittings of each m_s (s = 2..half2) into k ordered parts.
      std::vector<std::vector<std::vector<unsigned>>> split_lists;
      for (unsigned s = 2; s <= half2; ++s)
        split_lists.push_back(enum_weak_compositions(m[s - 1], k));

      Rational inner(0);
      std::vector<std::size_t> odo(split_lists.size(), 0);
      while (true) {
        Integer mult = 1;
        std::vector<long> c(k, 0);
        for (std::size_t t = 0; t < split_lists.size(); ++t) {
          const unsigned s = static_cast<unsigned>(t) + 2;
          const auto& parts = split_lists[t][odo[t]];
          mult *= multinomial(m[s - 1], parts);
          for (unsigned i = 0; i < k; ++i) c[i] += static_cast<long>(s) * parts[i];
        }
        inner += Rational(mult) * cache.eval(c, m1);

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
      total += wa.weight * wb.weight * inner;
    }
  }

  const long weight = static_cast<long>(q.k1) * q.n1 + static_cast<long>(q.k2) * q.n2;
  CoeffResult r;
  r.formula = FormulaTag::Det;
  r.exponent = scaling_exponent(q);
  if (q.ensemble == Ensemble::Sp) {
    const long kk = static_cast<long>(k);
    total *= pow2(-(kk * (kk + 1) / 2 + weight));
    if (weight % 2 != 0) total = -total;
  } else {
    const long kk = static_cast<long>(k);
    total *= pow2(-(kk * (kk - 3) / 2 + weight));
  }
  r.value = std::move(total);
  return r;
}

CoeffResult leading_coeff_comb(const CoeffQuery& q) {
  validate(q);
  require_sp_or_so(q, "leading_coeff_comb");
  const unsigned k = q.k1 + q.k2;
  const int delta = q.ensemble == Ensemble::Sp ? 1 : 0;

  Rational total(0);
  BoundedRowMatrixStream lstream(q.k1, k, q.n1);
  BoundedRowMatrix L, M;
  while (lstream.next(L)) {
    Integer lfac = 1;
    for (unsigned i = 0; i < q.k1; ++i) lfac *= factorial(q.n1 - 2 * L.row_sum(i));

    BoundedRowMatrixStream mstream(q.k2, k, q.n2);
    while (mstream.next(M)) {
      Integer denom = lfac;
      for (unsigned i = 0; i < q.k2; ++i) denom *= factorial(q.n2 - 2 * M.row_sum(i));

      std::vector<long> V(k);
      for (unsigned j = 0; j < k; ++j)
        V[j] = 2L * (L.col_sum(j) + M.col_sum(j));

      Integer pairwise = 1;
      for (unsigned i = 1; i <= k; ++i)
        for (unsigned j = i + 1; j <= k; ++j)
          pairwise *= Integer(V[j - 1] - V[i - 1] - 2L * j + 2L * i);
      if (sgn(pairwise) == 0) continue;

      for (unsigned j = 1; j <= k; ++j)
        denom *= factorial(static_cast<unsigned>(2L * k + V[j - 1] - 2L * j + delta));

      total += make_rational(std::move(pairwise), std::move(denom));
    }
  }

  const long weight = static_cast<long>(q.k1) * q.n1 + static_cast<long>(q.k2) * q.n2;
  const long kk = static_cast<long>(k);
  Integer deriv_fac = 1;
  for (unsigned c = 0; c < q.k1; ++c) deriv_fac *= factorial(q.n1);
  for (unsigned c = 0; c < q.k2; ++c) deriv_fac *= factorial(q.n2);
  total *= deriv_fac;

  long sign_exp = kk * (kk - 1) / 2;
  if (q.ensemble == Ensemble::Sp) {
    sign_exp += weight;
    total *= pow2(-(kk * (kk + 1) / 2 + weight));
  } else {
    total *= pow2(-(kk * (kk - 3) / 2 + weight));
  }
  if (sign_exp % 2 != 0) total = -total;

  CoeffResult r;
  r.value = std::move(total);
  r.exponent = scaling_exponent(q);
  r.formula = FormulaTag::Comb;
  return r;
}

CoeffResult leading_coeff_ominus(const CoeffQuery& q, Backend backend) {
  validate(q);
  if (q.ensemble != Ensemble::OMinus)
    throw InvalidQuery("leading_coeff_ominus: query must have ensemble ominus");

  CoeffQuery reduced{Ensemble::Sp, q.k1, q.k2, q.n1 - 1, q.n2 - 1};
  CoeffResult sp = backend == Backend::Det ? leading_coeff_det(reduced)
                                           : leading_coeff_comb(reduced);

  Integer scale = 1;
  mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), q.k1 + q.k2);
  Integer p1, p2;
  mpz_ui_pow_ui(p1.get_mpz_t(), q.n1, q.k1);
  mpz_ui_pow_ui(p2.get_mpz_t(), q.n2, q.k2);
  scale *= p1 * p2;

  Rational value = sp.value * scale;
  if ((q.k1 * (q.n1 - 1) + q.k2 * (q.n2 - 1)) % 2 != 0) value = -value;

  return CoeffResult{std::move(value), scaling_exponent(q), FormulaTag::OMinusReduction};
}

CoeffResult leading_coeff(const CoeffQuery& q, Backend backend) {
  if (q.ensemble == Ensemble::OMinus) return leading_coeff_ominus(q, backend);
  return backend == Backend::Det ? leading_coeff_det(q) : leading_coeff_comb(q);
}

Rational first_moment_closed_form(Ensemble e, unsigned n) {
  if (n < 1)
    throw InvalidQuery("first_moment_closed_form: requires n >= 1");
  switch (e) {
    case Ensemble::Sp: {
      Rational v = make_rational(1, 2 * (static_cast<long>(n) + 1));
      return n % 2 == 0 ? v : -v;
    }
    case Ensemble::SO:
      return Rational(1);
    default:
      throw InvalidQuery("first_moment_closed_form: defined for sp and so only");
  }
}

}  // namespace cpmom
