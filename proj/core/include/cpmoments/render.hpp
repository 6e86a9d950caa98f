#pragma once

#include <string>

#include "cpmoments/rational.hpp"

namespace cpmom {

// "p/q" with the denominator in prime-factorized form, e.g.
// "23/(2^7*3*5*7)"; the numerator is factored too when it is composite.
// Factoring is by trial division, intended for the table-sized values
// this project produces.
std::string factored_string(const Rational& q);

std::string factored_string(const Integer& n);

}  // namespace cpmom
