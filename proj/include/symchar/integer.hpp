#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace symchar {

using Integer = mpz_class;
using Rational = mpq_class;

std::string to_string(const Integer& x);
// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& x);

// Accepts an optional sign followed by decimal digits; throws std::invalid_argument otherwise.
Integer parse_integer(std::string_view text);

Integer factorial(unsigned long n);

// Exponent of p in x. x must be nonzero, p >= 2.
int valuation(const Integer& x, unsigned long p);

bool is_prime(long n);

}  // namespace symchar
