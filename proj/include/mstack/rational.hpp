#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace mstack {

// All coefficient and value arithmetic is exact. GMP supplies the integer
// and rational substrate; everything above it works in these two types.
using BigInt = mpz_class;
using Rational = mpq_class;

// num/den in lowest terms with positive denominator; zero is 0/1.
// Throws ZeroDenominator on den == 0.
Rational make_rational(const BigInt& num, const BigInt& den);

BigInt int_pow(const BigInt& base, unsigned long exp);

// base^exp for possibly negative exp; base must be nonzero when exp < 0.
Rational rat_pow(const BigInt& base, long exp);
Rational rat_pow(const Rational& base, long exp);

// Smallest k >= 0 with k*k >= n (n >= 0).
BigInt ceil_sqrt(const BigInt& n);

// Binomial coefficient C(n, k) for small n.
BigInt binomial(unsigned long n, unsigned long k);

bool is_prime_power(long q);

std::string rational_to_string(const Rational& x);

}  // namespace mstack
