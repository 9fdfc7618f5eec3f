#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace gl2tors {

using Integer = mpz_class;
using Rational = mpq_class;

/// Largest k with ell^k | n. Throws InfiniteValuation for n = 0.
long int_valuation(const Integer& n, const Integer& ell);

/// Valuation of a rational number; numerator and denominator handled separately.
long rational_valuation(const Rational& q, const Integer& ell);

bool is_prime(const Integer& n);

/// Primes p with lo <= p <= hi, ascending.
std::vector<long> primes_in_range(long lo, long hi);

/// Distinct prime divisors of |n| in ascending order. n must be nonzero.
std::vector<Integer> prime_divisors(const Integer& n);

/// All positive divisors of |n| in ascending order.
std::vector<Integer> divisors(const Integer& n);

Integer power(const Integer& base, unsigned long exponent);

bool fits_int64(const Integer& n);

}  // namespace gl2tors
