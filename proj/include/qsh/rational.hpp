#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qsh {

using Integer = mpz_class;
using Rational = mpq_class;

// "p/q" with q > 1, or "p" for integers.
std::string to_string(const Rational& r);

// Accepts "p", "-p", "p/q". Throws ParseError / DivisionByZero.
Rational parse_rational(std::string_view text);

// p/q in lowest terms. Throws DivisionByZero for q = 0.
Rational ratio(long p, long q);

Integer binomial(unsigned long n, unsigned long k);

}  // namespace qsh
