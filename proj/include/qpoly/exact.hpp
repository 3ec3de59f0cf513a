#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace qpoly {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// n! exactly.
Integer factorial(int n);

/// Binomial coefficient C(n, k); zero when k < 0 or k > n.
Integer binomial(int n, int k);

/// base^e with the convention 0^0 = 1.
Integer ipow(long base, int e);

}  // namespace qpoly
