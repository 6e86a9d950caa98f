#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace cpmom {

using Integer = mpz_class;
using Rational = mpq_class;

// mpq_class(num, den) keeps whatever representation it was given; this
// restores the canonical form (coprime, positive denominator, 0 == 0/1).
Rational make_rational(Integer num, Integer den);

inline bool is_canonical(const Rational& q) {
  return sgn(q.get_den()) > 0 && gcd(q.get_num(), q.get_den()) == 1;
}

// n!, memoized in a process-wide table. Reads are lock-free once the
// entry has been published; growing the table takes a mutex.
const Integer& factorial(unsigned n);

// n! / (parts[0]! * ... * parts.back()!). The parts must sum to n;
// anything else is an enumeration bug upstream and throws.
Integer multinomial(unsigned n, const std::vector<unsigned>& parts);

Integer binomial(unsigned n, unsigned k);

// 2^e as a rational, e may be negative.
Rational pow2(long e);

Rational pow_rational(const Rational& base, unsigned e);

std::string to_string(const Rational& q);

// Parses "p/q" or "p"; inverse of to_string.
Rational rational_from_string(const std::string& s);

}  // namespace cpmom
