#include "cpmoments/rational.hpp"

#include <atomic>
#include <array>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace cpmom {

Rational make_rational(Integer num, Integer den) {
  if (sgn(den) == 0) throw std::invalid_argument("make_rational: zero denominator");
  Rational q(std::move(num), std::move(den));
  q.canonicalize();
  return q;
}

namespace {

// Grow-only factorial table. Entries live in fixed-size blocks whose
// addresses never move, so a reader holding an index below `published`
// never races with growth.
constexpr unsigned kBlockBits = 8;
constexpr unsigned kBlockSize = 1u << kBlockBits;
constexpr unsigned kMaxBlocks = 4096;

struct FactorialTable {
  std::array<std::atomic<Integer*>, kMaxBlocks> blocks{};
  std::atomic<unsigned> published{0};
  std::mutex growth;

  const Integer& get(unsigned n) {
    if (n >= published.load(std::memory_order_acquire)) grow(n);
    return blocks[n >> kBlockBits].load(std::memory_order_relaxed)[n & (kBlockSize - 1)];
  }

  void grow(unsigned n) {
    std::lock_guard<std::mutex> lock(growth);
    unsigned have = published.load(std::memory_order_relaxed);
    if (n < have) return;
    if (n >= kMaxBlocks * kBlockSize)
      throw std::invalid_argument("factorial: argument too large for the shared table");
    for (unsigned i = have; i <= n; ++i) {
      unsigned b = i >> kBlockBits;
      if (blocks[b].load(std::memory_order_relaxed) == nullptr)
        blocks[b].store(new Integer[kBlockSize], std::memory_order_relaxed);
      Integer& slot = blocks[b].load(std::memory_order_relaxed)[i & (kBlockSize - 1)];
      if (i == 0)
        slot = 1;
      else
        slot = get_prev(i) * i;
    }
    published.store(n + 1, std::memory_order_release);
  }

  const Integer& get_prev(unsigned i) {
    return blocks[(i - 1) >> kBlockBits].load(std::memory_order_relaxed)[(i - 1) & (kBlockSize - 1)];
  }
};

FactorialTable& table() {
  static FactorialTable* t = new FactorialTable;
  return *t;
}

}  // namespace

const Integer& factorial(unsigned n) { return table().get(n); }

Integer multinomial(unsigned n, const std::vector<unsigned>& parts) {
  unsigned long sum = 0;
  for (unsigned p : parts) sum += p;
  if (sum != n)
    throw std::invalid_argument("multinomial: parts sum to " + std::to_string(sum) +
                                ", expected " + std::to_string(n));
  Integer result = factorial(n);
  for (unsigned p : parts) result /= factorial(p);
  return result;
}

Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Rational pow2(long e) {
  Rational q;
  if (e >= 0)
    mpq_mul_2exp(q.get_mpq_t(), Rational(1).get_mpq_t(), static_cast<unsigned long>(e));
  else
    mpq_div_2exp(q.get_mpq_t(), Rational(1).get_mpq_t(), static_cast<unsigned long>(-e));
  return q;
}

Rational pow_rational(const Rational& base, unsigned e) {
  Rational r(1);
  Rational b = base;
  unsigned k = e;
  while (k > 0) {
    if (k & 1) r *= b;
    b *= b;
    k >>= 1;
  }
  return r;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational rational_from_string(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("rational_from_string: cannot parse '" + s + "'");
  q.canonicalize();
  return q;
}

}  // namespace cpmom
