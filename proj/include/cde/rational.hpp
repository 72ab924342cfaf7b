#pragma once

#include <string>

#include <gmpxx.h>

namespace cde {

using Integer = mpz_class;
using Rational = mpq_class;

// p/q in lowest terms; mpq_class(p, q) alone is not canonical.
Rational fraction(const Integer& p, const Integer& q);

// Always "p/q", also for integers ("1/1").
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Accepts "p/q" or "p".
Rational parse_rational(const std::string& s);

Integer factorial(long n);
Integer binomial(long n, long k);
Integer lcm(const Integer& a, const Integer& b);

}  // namespace cde
